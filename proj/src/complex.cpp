#include "surg/complex.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surg {

namespace {

bool word_less(const std::vector<SignedEdge>& a, const std::vector<SignedEdge>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (signed_key(a[i]) != signed_key(b[i])) return signed_key(a[i]) < signed_key(b[i]);
    return false;
}

std::vector<SignedEdge> flip_reverse(const std::vector<SignedEdge>& w) {
    std::vector<SignedEdge> r(w.rbegin(), w.rend());
    for (auto& s : r) s = -s;
    return r;
}

}  // namespace

FaceWord::FaceWord(std::vector<SignedEdge> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("empty face word");
    for (SignedEdge s : word_)
        if (s == 0) throw std::invalid_argument("zero literal in face word");
    canon_ = word_;
    auto consider = [&](std::vector<SignedEdge> w) {
        for (int r = 0; r < static_cast<int>(w.size()); ++r) {
            if (word_less(w, canon_)) canon_ = w;
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
    };
    consider(word_);
    consider(flip_reverse(word_));
}

Complex::Complex(std::vector<FaceWord> faces) : faces_(std::move(faces)) { derive(); }

Complex Complex::from_words(const std::vector<std::vector<int>>& words) {
    std::vector<FaceWord> fs;
    fs.reserve(words.size());
    for (const auto& w : words) fs.emplace_back(w);
    return Complex(std::move(fs));
}

void Complex::derive() {
    std::set<int> labels;
    for (const auto& f : faces_)
        for (SignedEdge s : f.word()) labels.insert(edge_label(s));
    edge_labels_.assign(labels.begin(), labels.end());
    occurrence_.clear();
    for (const auto& f : faces_)
        for (SignedEdge s : f.word()) occurrence_[edge_label(s)]++;

    ends_.clear();
    for (int e : edge_labels_) {
        ends_.push_back({e, 0});
        ends_.push_back({e, 1});
    }
    std::sort(ends_.begin(), ends_.end());

    // Union-find closure of corner identifications.
    std::vector<int> parent(ends_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto idx = [&](EdgeEnd e) {
        auto it = std::lower_bound(ends_.begin(), ends_.end(), e);
        return static_cast<int>(it - ends_.begin());
    };
    for (const auto& f : faces_) {
        int k = f.size();
        for (int i = 0; i < k; ++i) {
            int a = find(idx(finish_end(f.at(i))));
            int b = find(idx(start_end(f.at(i + 1))));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    // Vertex ids in order of least member.
    end_vertex_.assign(ends_.size(), -1);
    vertex_count_ = 0;
    for (size_t i = 0; i < ends_.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (end_vertex_[r] < 0) end_vertex_[r] = vertex_count_++;
        end_vertex_[i] = end_vertex_[r];
    }
}

int Complex::occurrence_count(int label) const {
    auto it = occurrence_.find(label);
    return it == occurrence_.end() ? 0 : it->second;
}

bool Complex::has_edge(int label) const { return occurrence_.count(label) > 0; }

int Complex::vertex_of(EdgeEnd e) const {
    auto it = std::lower_bound(ends_.begin(), ends_.end(), e);
    if (it == ends_.end() || *it != e) throw std::invalid_argument("unknown edge end");
    return end_vertex_[it - ends_.begin()];
}

std::vector<EdgeEnd> Complex::vertex_members(int v) const {
    std::vector<EdgeEnd> out;
    for (size_t i = 0; i < ends_.size(); ++i)
        if (end_vertex_[i] == v) out.push_back(ends_[i]);
    return out;
}

std::vector<int> Complex::face_corner_vertices(int f) const {
    const FaceWord& w = faces_.at(f);
    std::vector<int> out(w.size());
    for (int i = 0; i < w.size(); ++i) out[i] = vertex_of(finish_end(w.at(i)));
    return out;
}

std::vector<int> Complex::face_vertex_closure(int f) const {
    auto cs = face_corner_vertices(f);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

std::vector<int> Complex::boundary_edges() const {
    std::vector<int> out;
    for (int e : edge_labels_)
        if (occurrence_count(e) == 1) out.push_back(e);
    return out;
}

bool Complex::is_interior_vertex(int v) const {
    for (int e : boundary_edges())
        for (int u : edge_vertices(e))
            if (u == v) return false;
    return true;
}

std::vector<int> Complex::interior_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count_; ++v)
        if (is_interior_vertex(v)) out.push_back(v);
    return out;
}

bool Complex::is_loop(int label) const {
    return vertex_of({label, 0}) == vertex_of({label, 1});
}

std::vector<int> Complex::edge_vertices(int label) const {
    int a = vertex_of({label, 0});
    int b = vertex_of({label, 1});
    if (a == b) return {a};
    if (a > b) std::swap(a, b);
    return {a, b};
}

bool Complex::adjacent(int u, int v) const {
    for (int e : edge_labels_) {
        auto vs = edge_vertices(e);
        if (vs.size() == 2 && ((vs[0] == u && vs[1] == v) || (vs[0] == v && vs[1] == u)))
            return true;
    }
    return false;
}

int Complex::euler_characteristic() const {
    return vertex_count_ - edge_count() + face_count();
}

bool Complex::all_triangles() const {
    for (const auto& f : faces_)
        if (f.size() != 3) return false;
    return true;
}

bool Complex::connected() const {
    if (faces_.empty()) return true;
    // Faces sharing an edge or a vertex are connected.
    std::vector<int> comp(faces_.size(), -1);
    std::queue<int> q;
    q.push(0);
    comp[0] = 0;
    auto shares = [&](int f, int g) {
        for (SignedEdge a : faces_[f].word())
            for (SignedEdge b : faces_[g].word())
                if (edge_label(a) == edge_label(b)) return true;
        auto cf = face_vertex_closure(f), cg = face_vertex_closure(g);
        for (int x : cf)
            for (int y : cg)
                if (x == y) return true;
        return false;
    };
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int g = 0; g < face_count(); ++g)
            if (comp[g] < 0 && shares(f, g)) {
                comp[g] = 0;
                q.push(g);
            }
    }
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

std::vector<EdgeEnd> Complex::link_vertices(int v) const { return vertex_members(v); }

MultiGraph Complex::link(int v) const {
    if (v < 0 || v >= vertex_count_) throw std::invalid_argument("unknown vertex");
    auto members = vertex_members(v);
    auto index_of = [&](EdgeEnd e) {
        auto it = std::lower_bound(members.begin(), members.end(), e);
        return static_cast<int>(it - members.begin());
    };
    MultiGraph g(static_cast<int>(members.size()));
    for (const auto& f : faces_) {
        for (int i = 0; i < f.size(); ++i) {
            EdgeEnd a = finish_end(f.at(i));
            EdgeEnd b = start_end(f.at(i + 1));
            if (vertex_of(a) != v) continue;
            g.add_edge(index_of(a), index_of(b));
        }
    }
    return g;
}

std::string Complex::text(bool multiline) const {
    std::ostringstream os;
    os << '[';
    for (int f = 0; f < face_count(); ++f) {
        if (f) os << (multiline ? ",\n" : ",");
        os << '[';
        const auto& w = faces_[f].word();
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << w[i];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

/// ---- parsing -------------------------------------------------------------

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        for (;;) {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
            if (pos < s.size() && s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
                continue;
            }
            break;
        }
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at " << line << ":" << col << ": " << msg;
        throw std::runtime_error(os.str());
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        return s[pos];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            advance();
            return true;
        }
        return false;
    }
    long read_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            advance();
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > std::numeric_limits<int>::max()) fail("integer literal too large");
            advance();
        }
        return neg ? -v : v;
    }
    void end() {
        skip_ws();
        if (pos != s.size()) fail("trailing input");
    }
};

}  // namespace

Complex parse_complex(const std::string& text) {
    Scanner sc{text};
    sc.expect('[');
    std::vector<std::vector<int>> words;
    if (!sc.accept(']')) {
        do {
            sc.expect('[');
            if (sc.accept(']')) sc.fail("empty face list");
            std::vector<int> word;
            do {
                long v = sc.read_int();
                if (v == 0) sc.fail("zero literal");
                word.push_back(static_cast<int>(v));
            } while (sc.accept(','));
            sc.expect(']');
            words.push_back(std::move(word));
        } while (sc.accept(','));
        sc.expect(']');
    }
    sc.end();
    return Complex::from_words(words);
}

Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_complex(os.str());
}

/// ---- isomorphism ----------------------------------------------------------

namespace {

// Invariant attached to a face for candidate pruning: length plus the sorted
// per-occurrence profile (occurrence count, loop flag).
std::vector<int> face_signature(const Complex& c, int f) {
    std::vector<int> sig;
    const auto& w = c.faces()[f].word();
    sig.push_back(static_cast<int>(w.size()));
    std::vector<std::pair<int, int>> prof;
    for (SignedEdge s : w)
        prof.emplace_back(c.occurrence_count(edge_label(s)), c.is_loop(edge_label(s)) ? 1 : 0);
    std::sort(prof.begin(), prof.end());
    for (auto [o, l] : prof) {
        sig.push_back(o);
        sig.push_back(l);
    }
    return sig;
}

std::vector<std::vector<SignedEdge>> alignments(const FaceWord& f) {
    std::vector<std::vector<SignedEdge>> out;
    auto push_rotations = [&](std::vector<SignedEdge> w) {
        for (int r = 0; r < static_cast<int>(w.size()); ++r) {
            out.push_back(w);
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
    };
    push_rotations(f.word());
    push_rotations(flip_reverse(f.word()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct ComplexIsoSearch {
    const Complex& a;
    const Complex& b;
    std::optional<std::pair<int, int>> pointed;
    const std::function<bool(const ComplexIso&)>* visit = nullptr;

    std::map<int, int> edge_map;           // a label -> signed b label
    std::map<int, int> used_b;             // b label -> a label
    std::vector<int> face_map;             // a face -> b face
    std::vector<char> face_used_b;
    std::vector<std::vector<int>> sig_a, sig_b;
    std::vector<std::vector<std::vector<SignedEdge>>> aligns_b;
    bool stopped = false;

    bool try_extend(int fa, const std::vector<SignedEdge>& wa, const std::vector<SignedEdge>& wb,
                    std::vector<int>& added) {
        for (size_t i = 0; i < wa.size(); ++i) {
            int la = edge_label(wa[i]);
            int sb = wa[i] > 0 ? wb[i] : -wb[i];
            auto it = edge_map.find(la);
            if (it != edge_map.end()) {
                if (it->second != sb) return false;
                continue;
            }
            auto ub = used_b.find(edge_label(sb));
            if (ub != used_b.end()) {
                if (ub->second != la) return false;
                // label already used with a different orientation pairing
                return false;
            }
            if (a.occurrence_count(la) != b.occurrence_count(edge_label(sb))) return false;
            if (a.is_loop(la) != b.is_loop(edge_label(sb))) return false;
            edge_map[la] = sb;
            used_b[edge_label(sb)] = la;
            added.push_back(la);
        }
        (void)fa;
        return true;
    }

    void retract(const std::vector<int>& added) {
        for (int la : added) {
            used_b.erase(edge_label(edge_map[la]));
            edge_map.erase(la);
        }
    }

    int pick_next_face() const {
        // Most already-mapped edges first, then rarest signature.
        int best = -1;
        std::pair<int, int> best_score{-1, -1};
        for (int f = 0; f < a.face_count(); ++f) {
            if (face_map[f] >= 0) continue;
            int mapped = 0;
            for (SignedEdge s : a.faces()[f].word())
                if (edge_map.count(edge_label(s))) ++mapped;
            std::pair<int, int> score{mapped, -static_cast<int>(a.faces()[f].word().size())};
            if (best < 0 || score > best_score) {
                best = f;
                best_score = score;
            }
        }
        return best;
    }

    bool finish() {
        ComplexIso iso;
        iso.edge_map = edge_map;
        iso.face_map = face_map;
        if (pointed) {
            auto members = a.vertex_members(pointed->first);
            EdgeEnd e0 = members.front();
            int sb = edge_map.at(e0.label);
            EdgeEnd img = e0.end == 0 ? start_end(sb) : finish_end(sb);
            if (b.vertex_of(img) != pointed->second) return false;
        }
        if (visit) {
            if ((*visit)(iso)) stopped = true;
            return false;  // keep searching unless stopped
        }
        return true;
    }

    bool run() {
        if (static_cast<int>(edge_map.size()) == a.edge_count() &&
            std::none_of(face_map.begin(), face_map.end(), [](int m) { return m < 0; }))
            return finish();
        int fa = pick_next_face();
        if (fa < 0) return finish();
        for (int fb = 0; fb < b.face_count(); ++fb) {
            if (stopped) return false;
            if (face_used_b[fb] || sig_a[fa] != sig_b[fb]) continue;
            for (const auto& wb : aligns_b[fb]) {
                std::vector<int> added;
                if (try_extend(fa, a.faces()[fa].word(), wb, added)) {
                    face_map[fa] = fb;
                    face_used_b[fb] = 1;
                    if (run()) return true;
                    if (stopped) return false;
                    face_map[fa] = -1;
                    face_used_b[fb] = 0;
                }
                retract(added);
            }
        }
        return false;
    }
};

std::optional<ComplexIso> iso_search(const Complex& a, const Complex& b,
                                     std::optional<std::pair<int, int>> pointed,
                                     const std::function<bool(const ComplexIso&)>* visit) {
    if (a.face_count() != b.face_count() || a.edge_count() != b.edge_count() ||
        a.vertex_count() != b.vertex_count())
        return std::nullopt;
    ComplexIsoSearch s{a, b, pointed, visit};
    s.face_map.assign(a.face_count(), -1);
    s.face_used_b.assign(b.face_count(), 0);
    s.sig_a.resize(a.face_count());
    s.sig_b.resize(b.face_count());
    for (int f = 0; f < a.face_count(); ++f) s.sig_a[f] = face_signature(a, f);
    for (int f = 0; f < b.face_count(); ++f) s.sig_b[f] = face_signature(b, f);
    {
        auto ha = s.sig_a, hb = s.sig_b;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    s.aligns_b.resize(b.face_count());
    for (int f = 0; f < b.face_count(); ++f) s.aligns_b[f] = alignments(b.faces()[f]);
    if (s.run()) {
        ComplexIso iso;
        iso.edge_map = s.edge_map;
        iso.face_map = s.face_map;
        return iso;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ComplexIso> isomorphic(const Complex& a, const Complex& b,
                                     std::optional<std::pair<int, int>> pointed) {
    return iso_search(a, b, pointed, nullptr);
}

void for_each_isomorphism(const Complex& a, const Complex& b,
                          const std::function<bool(const ComplexIso&)>& visit) {
    iso_search(a, b, std::nullopt, &visit);
}

/// ---- canonical form --------------------------------------------------------

namespace {

constexpr int kUnmapped = std::numeric_limits<int>::max() / 2;

struct CanonState {
    const Complex& c;
    std::map<int, int> edge_map;  // old label -> signed new label
    int next_label = 1;
    std::vector<char> done;
    std::vector<std::vector<SignedEdge>> sequence;  // finalized words in order

    std::vector<int> project(const std::vector<SignedEdge>& w) const {
        std::vector<int> keys(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            auto it = edge_map.find(edge_label(w[i]));
            if (it == edge_map.end()) {
                keys[i] = kUnmapped;
            } else {
                int img = w[i] > 0 ? it->second : -it->second;
                keys[i] = signed_key(img);
            }
        }
        return keys;
    }

    void assign(const std::vector<SignedEdge>& w) {
        for (SignedEdge s : w) {
            if (!edge_map.count(edge_label(s))) {
                edge_map[edge_label(s)] = s > 0 ? next_label : -next_label;
                ++next_label;
            }
        }
    }

    std::vector<SignedEdge> finalize(const std::vector<SignedEdge>& w) const {
        std::vector<SignedEdge> out(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            int m = edge_map.at(edge_label(w[i]));
            out[i] = w[i] > 0 ? m : -m;
        }
        return out;
    }
};

using Encoding = std::vector<std::vector<SignedEdge>>;

struct CanonDriver {
    const Complex& c;
    std::vector<std::vector<std::vector<SignedEdge>>> aligns;
    Encoding best;
    std::map<int, int> best_map;
    bool have_best = false;

    bool prefix_worse(const Encoding& seq) const {
        if (!have_best) return false;
        size_t n = std::min(seq.size(), best.size());
        for (size_t i = 0; i < n; ++i) {
            if (seq[i] != best[i]) {
                // compare by signed keys
                const auto &a = seq[i], &b = best[i];
                size_t m = std::min(a.size(), b.size());
                for (size_t j = 0; j < m; ++j) {
                    if (signed_key(a[j]) != signed_key(b[j]))
                        return signed_key(a[j]) > signed_key(b[j]);
                }
                return a.size() > b.size();
            }
        }
        return false;
    }

    void step(CanonState& st) {
        if (prefix_worse(st.sequence)) return;
        if (static_cast<int>(st.sequence.size()) == c.face_count()) {
            if (!have_best || encoding_less(st.sequence, best)) {
                best = st.sequence;
                best_map = st.edge_map;
                have_best = true;
            }
            return;
        }
        // Choose the remaining face/alignment with the least projection.
        std::vector<int> best_keys;
        std::vector<std::pair<int, const std::vector<SignedEdge>*>> chosen;
        for (int f = 0; f < c.face_count(); ++f) {
            if (st.done[f]) continue;
            for (const auto& w : aligns[f]) {
                auto keys = st.project(w);
                if (chosen.empty() || keys < best_keys) {
                    best_keys = keys;
                    chosen.clear();
                    chosen.emplace_back(f, &w);
                } else if (keys == best_keys) {
                    chosen.emplace_back(f, &w);
                }
            }
        }
        // Branch over ties; distinct continuations are rare in practice.
        for (auto [f, w] : chosen) {
            CanonState next = st;
            next.done[f] = 1;
            next.assign(*w);
            next.sequence.push_back(next.finalize(*w));
            step(next);
        }
    }

    static bool encoding_less(const Encoding& a, const Encoding& b) {
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            const auto &x = a[i], &y = b[i];
            size_t m = std::min(x.size(), y.size());
            for (size_t j = 0; j < m; ++j)
                if (signed_key(x[j]) != signed_key(y[j])) return signed_key(x[j]) < signed_key(y[j]);
            if (x.size() != y.size()) return x.size() < y.size();
        }
        return a.size() < b.size();
    }
};

CanonDriver run_canonical(const Complex& c) {
    CanonDriver drv{c};
    drv.aligns.resize(c.face_count());
    for (int f = 0; f < c.face_count(); ++f) drv.aligns[f] = alignments(c.faces()[f]);
    if (c.face_count() == 0) {
        drv.have_best = true;
        return drv;
    }
    // Seeds: faces in the minimal signature class, every alignment.
    std::vector<int> seeds;
    std::vector<int> min_sig;
    for (int f = 0; f < c.face_count(); ++f) {
        auto sig = face_signature(c, f);
        if (seeds.empty() || sig < min_sig) {
            min_sig = sig;
            seeds = {f};
        } else if (sig == min_sig) {
            seeds.push_back(f);
        }
    }
    for (int f : seeds) {
        for (const auto& w : drv.aligns[f]) {
            CanonState st{c};
            st.done.assign(c.face_count(), 0);
            st.done[f] = 1;
            st.assign(w);
            st.sequence.push_back(st.finalize(w));
            drv.step(st);
        }
    }
    return drv;
}

}  // namespace

Complex canonical_form(const Complex& c) {
    auto drv = run_canonical(c);
    std::vector<FaceWord> faces;
    for (auto& w : drv.best) faces.emplace_back(w);
    return Complex(std::move(faces));
}

std::string pointed_canonical_text(const PointedComplex& pc) {
    // Jointly minimize (encoding, basepoint image); equal texts iff the
    // pointed complexes are isomorphic.
    const Complex& c = pc.complex;
    auto drv = run_canonical(c);
    // Among relabelings achieving the minimal encoding, take the least image
    // of the basepoint class.
    std::optional<std::string> best_base;
    std::vector<std::vector<std::vector<SignedEdge>>> aligns(c.face_count());
    for (int f = 0; f < c.face_count(); ++f) aligns[f] = alignments(c.faces()[f]);
    // Re-run, collecting basepoint images of exact-best encodings.
    struct Collector {
        const Complex& c;
        const Encoding& target;
        const PointedComplex& pc;
        std::vector<std::vector<std::vector<SignedEdge>>>& aligns;
        std::optional<std::string>* best_base;

        void step(CanonState& st) {
            size_t i = st.sequence.size();
            if (i > 0 && (i > target.size() || st.sequence[i - 1] != target[i - 1])) return;
            if (static_cast<int>(i) == c.face_count()) {
                Complex relabeled = canonical_from_map(st);
                auto members = pc.complex.vertex_members(pc.basepoint);
                EdgeEnd e0 = members.front();
                int m = st.edge_map.at(e0.label);
                EdgeEnd img = e0.end == 0 ? start_end(m) : finish_end(m);
                int v = relabeled.vertex_of(img);
                auto least = relabeled.vertex_members(v).front();
                std::ostringstream os;
                os << least.label << '.' << least.end;
                std::string key = os.str();
                if (!*best_base || key < **best_base) *best_base = key;
                return;
            }
            std::vector<int> best_keys;
            std::vector<std::pair<int, const std::vector<SignedEdge>*>> chosen;
            for (int f = 0; f < c.face_count(); ++f) {
                if (st.done[f]) continue;
                for (const auto& w : aligns[f]) {
                    auto keys = st.project(w);
                    if (chosen.empty() || keys < best_keys) {
                        best_keys = keys;
                        chosen.clear();
                        chosen.emplace_back(f, &w);
                    } else if (keys == best_keys) {
                        chosen.emplace_back(f, &w);
                    }
                }
            }
            for (auto [f, w] : chosen) {
                CanonState next = st;
                next.done[f] = 1;
                next.assign(*w);
                next.sequence.push_back(next.finalize(*w));
                step(next);
            }
        }

        Complex canonical_from_map(const CanonState& st) const {
            std::vector<FaceWord> faces;
            for (const auto& w : st.sequence) faces.emplace_back(w);
            return Complex(std::move(faces));
        }
    };
    Collector col{c, drv.best, pc, aligns, &best_base};
    if (c.face_count() > 0) {
        std::vector<int> seeds;
        std::vector<int> min_sig;
        for (int f = 0; f < c.face_count(); ++f) {
            auto sig = face_signature(c, f);
            if (seeds.empty() || sig < min_sig) {
                min_sig = sig;
                seeds = {f};
            } else if (sig == min_sig) {
                seeds.push_back(f);
            }
        }
        for (int f : seeds) {
            for (const auto& w : aligns[f]) {
                CanonState st{c};
                st.done.assign(c.face_count(), 0);
                st.done[f] = 1;
                st.assign(w);
                st.sequence.push_back(st.finalize(w));
                col.step(st);
            }
        }
    }
    std::vector<FaceWord> faces;
    for (auto& w : drv.best) faces.emplace_back(w);
    Complex canon(std::move(faces));
    return canon.text() + ";base=" + (best_base ? *best_base : "-");
}

Complex disjoint_union(const Complex& a, const Complex& b) {
    int offset = 0;
    for (int e : a.edge_labels()) offset = std::max(offset, e);
    std::vector<std::vector<int>> words;
    for (const auto& f : a.faces()) words.push_back(f.word());
    for (const auto& f : b.faces()) {
        std::vector<int> w;
        for (SignedEdge s : f.word()) w.push_back(s > 0 ? s + offset : s - offset);
        words.push_back(std::move(w));
    }
    return Complex::from_words(words);
}

}  // namespace surg
