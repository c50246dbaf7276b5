#include "surg/complex.hpp"
#include "surg/multigraph.hpp"
#include "surg/reference_complexes.hpp"

namespace surg {

// Defined operationally as the link of the flip-surgered double cover rather
// than transcribed from a drawing.
MultiGraph fake_moebius_kantor() {
    Complex x = complex_xdoubleprime();
    return x.link(0);
}

}  // namespace surg
