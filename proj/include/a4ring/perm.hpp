#pragma once
// Permutations of four points and the alternating group on them.
//
// The group is generated by the double transpositions a1 = (1,2)(3,4),
// a2 = (1,4)(2,3) and the 3-cycle b = (1,2,3).  The Klein four-subgroup
// H = {e, a1, a2, a1*a2} is normal and G = H x| <b>.  Elements are
// enumerated as h * b^j ordered by (j, position of h), so index = 4j + i.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace a4ring {

struct Perm4 {
    // img[i] is the image of point i (0-based)
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    static Perm4 identity() { return {}; }
    // from 1-based images, e.g. {2,1,4,3} for (1,2)(3,4)
    static Perm4 from_images1(std::array<int, 4> one_based);

    // right-to-left: (p * q)(x) = p(q(x))
    Perm4 operator*(const Perm4& o) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[i] = img[o.img[i]];
        return r;
    }
    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[img[i]] = static_cast<uint8_t>(i);
        return r;
    }
    bool operator==(const Perm4& o) const { return img == o.img; }
    bool operator!=(const Perm4& o) const { return img != o.img; }

    int order() const;
    // "()" for the identity, otherwise cycles like "(1,2)(3,4)"
    std::string cycle_str() const;
};

Perm4 perm_a1();
Perm4 perm_a2();
Perm4 perm_b();

// the alternating group on 4 points with fixed element order
class A4 {
   public:
    static const A4& instance();

    static constexpr int order = 12;

    const Perm4& element(int idx) const { return elems_[static_cast<size_t>(idx)]; }
    int index_of(const Perm4& p) const;

    int mul(int g, int h) const { return mul_[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
    int inv(int g) const { return inv_[static_cast<size_t>(g)]; }

    // decomposition g = h * b^j with h in H; returns (i, j), element index is 4j + i
    std::pair<int, int> factor(int g) const { return {g % 4, g / 4}; }

    int idx_e() const { return 0; }
    int idx_a1() const { return 1; }
    int idx_a2() const { return 2; }
    int idx_a1a2() const { return 3; }
    int idx_b() const { return 4; }
    int idx_b2() const { return 8; }

    // representatives of the four conjugacy classes: e, a1, b, b^2
    std::array<int, 4> class_reps() const { return {0, 1, 4, 8}; }
    std::array<int, 4> class_sizes() const { return {1, 3, 4, 4}; }
    // class index of an element (0..3 in the order above)
    int class_of(int g) const;

   private:
    A4();
    std::array<Perm4, 12> elems_;
    std::array<std::array<int, 12>, 12> mul_;
    std::array<int, 12> inv_;
};

}  // namespace a4ring
