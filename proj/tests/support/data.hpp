#pragma once

// Shared hand-built data used across the test suite: small root data, frames,
// and involutions with well-known invariants.

#include "dualnorm/parameters.hpp"
#include "dualnorm/root_datum.hpp"

namespace testdata {

using dualnorm::BasedRootDatum;
using dualnorm::IMat;
using dualnorm::Involution;
using dualnorm::param::DualGroupFrame;
using dualnorm::param::full_frame;

inline BasedRootDatum rd_a1() {
    BasedRootDatum rd;
    rd.rank = 1;
    rd.simple_roots = {{1}};
    rd.simple_coroots = {{2}};
    return rd;
}

inline BasedRootDatum rd_a2() {
    BasedRootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{2, -1}, {-1, 2}};
    rd.simple_coroots = {{1, 0}, {0, 1}};
    return rd;
}

inline BasedRootDatum rd_c2() {
    BasedRootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{1, -1}, {0, 2}};
    rd.simple_coroots = {{1, -1}, {0, 1}};
    return rd;
}

inline BasedRootDatum rd_a1a1() {
    BasedRootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{1, 0}, {0, 1}};
    rd.simple_coroots = {{2, 0}, {0, 2}};
    return rd;
}

inline BasedRootDatum rd_a1_cubed() {
    BasedRootDatum rd;
    rd.rank = 3;
    rd.simple_roots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    rd.simple_coroots = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    return rd;
}

inline BasedRootDatum rd_torus(std::size_t n) {
    BasedRootDatum rd;
    rd.rank = n;
    return rd;
}

inline IMat minus_identity(std::size_t n) {
    IMat m(n, dualnorm::IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -1;
    return m;
}

inline Involution inv_minus(std::size_t n, bool ds = true) {
    Involution s;
    s.matrix = minus_identity(n);
    s.discrete_series_tag = ds;
    return s;
}

inline Involution inv_identity(std::size_t n) {
    Involution s;
    s.matrix = dualnorm::identity_imat(n);
    return s;
}

inline Involution inv_swap2() {
    Involution s;
    s.matrix = {{0, 1}, {1, 0}};
    return s;
}

/// Frames matching the bundled catalog entries.
inline DualGroupFrame frame_a1() { return full_frame(rd_a1(), inv_minus(1)); }
inline DualGroupFrame frame_a2() { return full_frame(rd_a2(), inv_minus(2)); }
inline DualGroupFrame frame_c2() { return full_frame(rd_c2(), inv_minus(2)); }
inline DualGroupFrame frame_a1a1() { return full_frame(rd_a1a1(), inv_minus(2)); }
inline DualGroupFrame frame_t1_compact() { return full_frame(rd_torus(1), inv_minus(1, false)); }
inline DualGroupFrame frame_t1_split() { return full_frame(rd_torus(1), inv_identity(1)); }
inline DualGroupFrame frame_t2_swap() { return full_frame(rd_torus(2), inv_swap2()); }

}  // namespace testdata
