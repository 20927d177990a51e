#include "a4ring/perm.hpp"

#include <stdexcept>

namespace a4ring {

Perm4 Perm4::from_images1(std::array<int, 4> one_based) {
    Perm4 p;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
        int v = one_based[static_cast<size_t>(i)] - 1;
        if (v < 0 || v > 3 || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Perm4: not a permutation");
        seen[static_cast<size_t>(v)] = true;
        p.img[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
    }
    return p;
}

int Perm4::order() const {
    Perm4 p = *this;
    int n = 1;
    while (p != identity()) {
        p = *this * p;
        ++n;
    }
    return n;
}

std::string Perm4::cycle_str() const {
    std::array<bool, 4> done{};
    std::string out;
    for (int s = 0; s < 4; ++s) {
        if (done[static_cast<size_t>(s)] || img[static_cast<size_t>(s)] == s) continue;
        out += '(';
        int x = s;
        bool first = true;
        do {
            done[static_cast<size_t>(x)] = true;
            if (!first) out += ',';
            out += std::to_string(x + 1);
            first = false;
            x = img[static_cast<size_t>(x)];
        } while (x != s);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm4 perm_a1() { return Perm4::from_images1({2, 1, 4, 3}); }
Perm4 perm_a2() { return Perm4::from_images1({4, 3, 2, 1}); }
Perm4 perm_b() { return Perm4::from_images1({2, 3, 1, 4}); }

const A4& A4::instance() {
    static const A4 g;
    return g;
}

A4::A4() {
    const Perm4 a1 = perm_a1(), a2 = perm_a2(), b = perm_b();
    const std::array<Perm4, 4> h{Perm4::identity(), a1, a2, a1 * a2};
    Perm4 bj = Perm4::identity();
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 4; ++i) elems_[static_cast<size_t>(4 * j + i)] = h[static_cast<size_t>(i)] * bj;
        bj = b * bj;
    }
    for (int g = 0; g < 12; ++g)
        for (int k = 0; k < 12; ++k)
            mul_[static_cast<size_t>(g)][static_cast<size_t>(k)] = index_of(elems_[static_cast<size_t>(g)] * elems_[static_cast<size_t>(k)]);
    for (int g = 0; g < 12; ++g) inv_[static_cast<size_t>(g)] = index_of(elems_[static_cast<size_t>(g)].inverse());
}

int A4::index_of(const Perm4& p) const {
    for (int i = 0; i < 12; ++i)
        if (elems_[static_cast<size_t>(i)] == p) return i;
    throw std::invalid_argument("A4: permutation is odd, not in the group");
}

int A4::class_of(int g) const {
    if (g == 0) return 0;
    if (g < 4) return 1;
    return g < 8 ? 2 : 3;
}

}  // namespace a4ring
