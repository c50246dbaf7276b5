#include "surg/reference_complexes.hpp"

namespace surg {

Complex complex_v23() {
    return Complex::from_words({{1, 1, 3},
                                {2, 2, 4},
                                {1, 5, 2},
                                {3, 6, 4},
                                {3, 7, 6},
                                {4, 6, 8},
                                {5, 7, 8},
                                {5, 8, 7}});
}

Complex complex_xprime() {
    return Complex::from_words({{1, 11, 3},
                                {2, 12, 4},
                                {1, 15, 12},
                                {3, 6, 4},
                                {3, 7, 6},
                                {4, 6, 8},
                                {5, 7, 8},
                                {5, 8, 7},
                                {11, 1, 13},
                                {12, 2, 14},
                                {11, 5, 2},
                                {13, 16, 14},
                                {13, 17, 16},
                                {14, 16, 18},
                                {15, 17, 18},
                                {15, 18, 17}});
}

Complex complex_xdoubleprime() {
    return Complex::from_words({{1, -2, 3},
                                {-11, 12, 4},
                                {1, 15, 12},
                                {3, 6, 4},
                                {3, 7, 6},
                                {4, 6, 8},
                                {5, 7, 8},
                                {5, 8, 7},
                                {11, 1, 13},
                                {12, 2, 14},
                                {11, 5, 2},
                                {13, 16, 14},
                                {13, 17, 16},
                                {14, 16, 18},
                                {15, 17, 18},
                                {15, 18, 17}});
}

Complex complex_w158() {
    return Complex::from_words({{1, 2, 3},
                                {1, 8, 13},
                                {1, 12, 4},
                                {2, 13, 10},
                                {2, 12, 7},
                                {3, 7, 6},
                                {3, 14, 7},
                                {4, 4, 5},
                                {5, 15, 14},
                                {5, 14, 15},
                                {6, 9, 11},
                                {6, 11, 9},
                                {8, 8, 9},
                                {10, 13, 15},
                                {10, 11, 12}});
}

std::map<int, int> xprime_cover_map() {
    std::map<int, int> m;
    for (int e = 1; e <= 8; ++e) {
        m[e] = e;
        m[10 + e] = e;
    }
    return m;
}

}  // namespace surg
