#pragma once

namespace orichrom {

/// Search and enumeration caps. Exceeding any of them raises CapExceeded.
struct Limits {
    int max_edges = 30;         ///< orientation enumeration: at most 2^max_edges orientations
    int max_vertices = 12;      ///< exact colouring solvers
    int max_target_order = 5;   ///< candidate targets enumerated by chi_o_plus
    int max_universal_n = 4;    ///< universal_tournament_size
    int max_construction_order = 5000;  ///< vertex count of any built StructuredTarget
    int jobs = 1;               ///< worker threads for orientation / target sweeps
};

} // namespace orichrom
