#ifndef SURG_REFERENCE_COMPLEXES_HPP
#define SURG_REFERENCE_COMPLEXES_HPP

#include "surg/complex.hpp"

namespace surg {

/// The four reference complexes shipped with the toolkit.
///
/// v23: one-vertex complex on 8 faces whose link is the Moebius-Kantor
/// graph. xprime: its connected double cover (two vertices, 16 faces).
/// xdoubleprime: the edge-flip surgery on xprime; its links have girth 5.
/// w158: 15-face complex with two vertices whose links are the
/// Moebius-Kantor and Heawood graphs.
Complex complex_v23();
Complex complex_xprime();
Complex complex_xdoubleprime();
Complex complex_w158();

/// Edge map of the covering xprime -> v23 (second-sheet label convention:
/// the copy of edge x is labeled 1x).
std::map<int, int> xprime_cover_map();

}  // namespace surg

#endif
