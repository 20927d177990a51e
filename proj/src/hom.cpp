#include "a4ring/hom.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "a4ring/f2.hpp"

namespace a4ring {
namespace {

size_t vec_index(int i, int j, int n) { return static_cast<size_t>(i) * n + j; }

Matrix unvec(const std::vector<Local2Rational>& v, int m, int n) {
    Matrix x(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = v[vec_index(i, j, n)];
    return x;
}

void verify_intertwines(const Matrix& x, const std::vector<Matrix>& rgens,
                        const std::vector<Matrix>& sgens) {
    for (size_t t = 0; t < rgens.size(); ++t)
        if (!(x * rgens[t] == sgens[t] * x))
            throw std::logic_error("intertwiners: basis element fails the constraint");
}

std::vector<Matrix> hom_from_coordinate_kernel(const std::vector<Matrix>& cols, const Lattice& k) {
    std::vector<Matrix> out;
    if (cols.empty()) return out;
    const int m = cols.front().rows(), n = cols.front().cols();
    for (int c = 0; c < k.rank(); ++c) {
        Matrix x(m, n);
        for (int t = 0; t < k.basis().rows(); ++t) {
            const Local2Rational& w = k.basis().at(t, c);
            if (w.is_zero()) continue;
            x = x + cols[static_cast<size_t>(t)].scaled(w);
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

HomBasis intertwiners(const Representation& r, const Representation& s) {
    const int n = r.degree(), m = s.degree(), nn = m * n;
    HomBasis hb{m, n, {}};
    if (nn == 0) return hb;

    const Matrix sb = s.b(), sb2 = sb * sb, rb = r.b(), rb2 = rb * rb;
    const auto chi_r = r.character(), chi_s = s.character();
    const long tr3 = nn + chi_s[2] * chi_r[3] + chi_s[3] * chi_r[2];
    if (tr3 % 3 != 0) throw std::logic_error("intertwiners: averaging trace not divisible by 3");
    const long pi_rank = tr3 / 3;
    if (pi_rank == 0) return hb;

    // pick mod-2 independent columns of the averaging idempotent; entry parity
    // comes from the outer-product form of pi(E_kl), since reduction mod 2 is
    // a ring homomorphism on Z_(2)
    const F2Matrix psb = F2Matrix::from_matrix(sb), psb2 = F2Matrix::from_matrix(sb2);
    const F2Matrix prb = F2Matrix::from_matrix(rb), prb2 = F2Matrix::from_matrix(rb2);
    F2Echelon ech(nn);
    std::vector<std::pair<int, int>> picked;
    for (int k = 0; k < m && static_cast<long>(picked.size()) < pi_rank; ++k)
        for (int l = 0; l < n && static_cast<long>(picked.size()) < pi_rank; ++l) {
            std::vector<uint64_t> bits(static_cast<size_t>((nn + 63) / 64), 0);
            for (int i = 0; i < m; ++i) {
                const bool u = psb.get(i, k), u2 = psb2.get(i, k);
                for (int j = 0; j < n; ++j) {
                    bool bit = (i == k && j == l);
                    if (u && prb2.get(l, j)) bit = !bit;
                    if (u2 && prb.get(l, j)) bit = !bit;
                    if (bit) {
                        size_t idx = vec_index(i, j, n);
                        bits[idx >> 6] |= 1ull << (idx & 63);
                    }
                }
            }
            if (ech.insert(std::move(bits))) picked.emplace_back(k, l);
        }
    if (static_cast<long>(picked.size()) != pi_rank)
        throw std::logic_error("intertwiners: idempotent image selection fell short");

    // exact basis of the b-equivariant part
    const Local2Rational third(1, 3);
    std::vector<Matrix> bcols;
    bcols.reserve(picked.size());
    for (auto [k, l] : picked) {
        Matrix x(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                Local2Rational v = sb.at(i, k) * rb2.at(l, j) + sb2.at(i, k) * rb.at(l, j);
                if (i == k && j == l) v += Local2Rational(1);
                x.at(i, j) = v * third;
            }
        bcols.push_back(std::move(x));
    }

    // inside the b-equivariant part the a1-constraint implies the a2 one
    Matrix cb(nn, static_cast<int>(bcols.size()));
    for (size_t t = 0; t < bcols.size(); ++t) {
        Matrix y = bcols[t] * r.a1() - s.a1() * bcols[t];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                cb.at(static_cast<int>(vec_index(i, j, n)), static_cast<int>(t)) = y.at(i, j);
    }
    Lattice k = kernel_lattice(cb);  // saturated coordinates stay saturated in the ambient
    hb.mats = hom_from_coordinate_kernel(bcols, k);
    for (const Matrix& x : hb.mats)
        verify_intertwines(x, {r.a1(), r.a2(), r.b()}, {s.a1(), s.a2(), s.b()});
    return hb;
}

HomBasis intertwiners_h(const HRepresentation& r, const HRepresentation& s) {
    const int n = r.degree(), m = s.degree(), nn = m * n;
    HomBasis hb{m, n, {}};
    if (nn == 0) return hb;

    Matrix constraint(2 * nn, nn);
    const Matrix rgens[2] = {r.a1(), r.a2()}, sgens[2] = {s.a1(), s.a2()};
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) {
            const int col = static_cast<int>(vec_index(k, l, n));
            for (int t = 0; t < 2; ++t) {
                // vec(E_kl * rg - sg * E_kl)
                for (int j = 0; j < n; ++j)
                    constraint.at(t * nn + static_cast<int>(vec_index(k, j, n)), col) += rgens[t].at(l, j);
                for (int i = 0; i < m; ++i)
                    constraint.at(t * nn + static_cast<int>(vec_index(i, l, n)), col) -= sgens[t].at(i, k);
            }
        }
    Lattice k = kernel_lattice(constraint);
    for (int c = 0; c < k.rank(); ++c) {
        std::vector<Local2Rational> v(static_cast<size_t>(nn));
        for (int i = 0; i < nn; ++i) v[static_cast<size_t>(i)] = k.basis().at(i, c);
        hb.mats.push_back(unvec(v, m, n));
    }
    for (const Matrix& x : hb.mats)
        verify_intertwines(x, {r.a1(), r.a2()}, {s.a1(), s.a2()});
    return hb;
}

namespace {

enum class SearchOutcome { found, none_certified, gave_up };

struct UnitSearch {
    SearchOutcome outcome = SearchOutcome::none_certified;
    std::vector<int> bits;
};

int flipped_bit(uint64_t prev, uint64_t cur) {
    uint64_t d = prev ^ cur;
    int b = 0;
    while (!(d & 1)) { d >>= 1; ++b; }
    return b;
}

// looks for a combination of the mats with odd determinant
UnitSearch find_unit_combination(const std::vector<Matrix>& mats, const SearchOptions& opts) {
    UnitSearch res;
    const int r = static_cast<int>(mats.size());
    if (r == 0) return res;
    std::vector<F2Matrix> fm;
    fm.reserve(mats.size());
    for (const auto& x : mats) fm.push_back(F2Matrix::from_matrix(x));

    if (r <= opts.exhaustive_cap) {
        F2Matrix cur(fm.front().rows(), fm.front().cols());
        uint64_t prev = 0;
        for (uint64_t g = 1; g < (1ull << r); ++g) {
            uint64_t gray = g ^ (g >> 1);
            cur = cur + fm[static_cast<size_t>(flipped_bit(prev, gray))];
            prev = gray;
            if (cur.det()) {
                for (int i = 0; i < r; ++i)
                    if ((gray >> i) & 1) res.bits.push_back(i);
                res.outcome = SearchOutcome::found;
                return res;
            }
        }
        return res;  // complete enumeration, certified absence
    }

    std::mt19937_64 rng(opts.seed);
    for (uint64_t it = 0; it < opts.sample_cap; ++it) {
        std::vector<int> bits;
        for (int i = 0; i < r; ++i)
            if (rng() & 1) bits.push_back(i);
        if (bits.empty()) continue;
        F2Matrix cur(fm.front().rows(), fm.front().cols());
        for (int i : bits) cur = cur + fm[static_cast<size_t>(i)];
        if (cur.det()) {
            res.bits = std::move(bits);
            res.outcome = SearchOutcome::found;
            return res;
        }
    }
    res.outcome = SearchOutcome::gave_up;
    return res;
}

Matrix sum_of(const std::vector<Matrix>& mats, const std::vector<int>& bits) {
    Matrix x(mats.front().rows(), mats.front().cols());
    for (int i : bits) x = x + mats[static_cast<size_t>(i)];
    return x;
}

struct PairSearch {
    SearchOutcome outcome = SearchOutcome::none_certified;
    std::vector<int> phi_bits, psi_bits;
};

// looks for (sum phi)(sum psi) with odd determinant; phi: c x t, psi: t x c
PairSearch find_unit_pair(const std::vector<Matrix>& phis, const std::vector<Matrix>& psis,
                          const SearchOptions& opts) {
    PairSearch res;
    const int r1 = static_cast<int>(phis.size()), r2 = static_cast<int>(psis.size());
    if (r1 == 0 || r2 == 0) return res;
    std::vector<F2Matrix> fphi, fpsi;
    for (const auto& x : phis) fphi.push_back(F2Matrix::from_matrix(x));
    for (const auto& x : psis) fpsi.push_back(F2Matrix::from_matrix(x));

    // single-pair fast path (subsumed by the exhaustive phase, cheap to try)
    for (int j = 0; j < r1; ++j)
        for (int i = 0; i < r2; ++i)
            if ((fphi[static_cast<size_t>(j)] * fpsi[static_cast<size_t>(i)]).det()) {
                res.outcome = SearchOutcome::found;
                res.phi_bits = {j};
                res.psi_bits = {i};
                return res;
            }

    if (r1 + r2 <= opts.exhaustive_cap) {
        const int c = fphi.front().rows(), t = fphi.front().cols();
        F2Matrix psum(t, c);
        uint64_t prev_y = 0;
        for (uint64_t gy = 1; gy < (1ull << r2); ++gy) {
            uint64_t y = gy ^ (gy >> 1);
            psum = psum + fpsi[static_cast<size_t>(flipped_bit(prev_y, y))];
            prev_y = y;
            std::vector<F2Matrix> prods;
            prods.reserve(static_cast<size_t>(r1));
            for (int j = 0; j < r1; ++j) prods.push_back(fphi[static_cast<size_t>(j)] * psum);
            F2Matrix cur(c, c);
            uint64_t prev_x = 0;
            for (uint64_t gx = 1; gx < (1ull << r1); ++gx) {
                uint64_t x = gx ^ (gx >> 1);
                cur = cur + prods[static_cast<size_t>(flipped_bit(prev_x, x))];
                prev_x = x;
                if (cur.det()) {
                    res.outcome = SearchOutcome::found;
                    for (int i = 0; i < r1; ++i)
                        if ((x >> i) & 1) res.phi_bits.push_back(i);
                    for (int i = 0; i < r2; ++i)
                        if ((y >> i) & 1) res.psi_bits.push_back(i);
                    return res;
                }
            }
        }
        return res;
    }

    std::mt19937_64 rng(opts.seed);
    for (uint64_t it = 0; it < opts.sample_cap; ++it) {
        std::vector<int> xb, yb;
        for (int i = 0; i < r1; ++i)
            if (rng() & 1) xb.push_back(i);
        for (int i = 0; i < r2; ++i)
            if (rng() & 1) yb.push_back(i);
        if (xb.empty() || yb.empty()) continue;
        F2Matrix phisum(fphi.front().rows(), fphi.front().cols());
        F2Matrix psisum(fpsi.front().rows(), fpsi.front().cols());
        for (int i : xb) phisum = phisum + fphi[static_cast<size_t>(i)];
        for (int i : yb) psisum = psisum + fpsi[static_cast<size_t>(i)];
        if ((phisum * psisum).det()) {
            res.outcome = SearchOutcome::found;
            res.phi_bits = std::move(xb);
            res.psi_bits = std::move(yb);
            return res;
        }
    }
    res.outcome = SearchOutcome::gave_up;
    return res;
}

template <typename RepT>
EquivalenceResult equivalence_impl(const RepT& r, const RepT& s, const HomBasis& hb,
                                   const std::vector<Matrix>& rgens, const std::vector<Matrix>& sgens,
                                   const SearchOptions& opts) {
    EquivalenceResult out;
    out.hom_rank = hb.rank();
    if (hb.rank() == 0) return out;
    UnitSearch us = find_unit_combination(hb.mats, opts);
    if (us.outcome == SearchOutcome::found) {
        Matrix u = sum_of(hb.mats, us.bits);
        if (!is_unimodular(u)) throw std::logic_error("equivalence witness not unimodular");
        verify_intertwines(u, rgens, sgens);
        out.status = Tri::yes;
        out.witness = std::move(u);
        return out;
    }
    out.status = us.outcome == SearchOutcome::none_certified ? Tri::no : Tri::indeterminate;
    return out;
}

}  // namespace

namespace {

// exact kernel budget exhausted: the decision stays open, never approximated
template <typename Result>
Result budget_indeterminate() {
    Result out;
    out.status = Tri::indeterminate;
    return out;
}

}  // namespace

EquivalenceResult are_equivalent(const Representation& r, const Representation& s,
                                 const SearchOptions& opts) {
    if (r.degree() != s.degree() || r.character() != s.character()) return {};
    try {
        HomBasis hb = intertwiners(r, s);
        return equivalence_impl(r, s, hb, {r.a1(), r.a2(), r.b()}, {s.a1(), s.a2(), s.b()}, opts);
    } catch (const std::runtime_error&) {
        return budget_indeterminate<EquivalenceResult>();
    }
}

EquivalenceResult are_equivalent_h(const HRepresentation& r, const HRepresentation& s,
                                   const SearchOptions& opts) {
    if (r.degree() != s.degree() || r.character() != s.character()) return {};
    try {
        HomBasis hb = intertwiners_h(r, s);
        return equivalence_impl(r, s, hb, {r.a1(), r.a2()}, {s.a1(), s.a2()}, opts);
    } catch (const std::runtime_error&) {
        return budget_indeterminate<EquivalenceResult>();
    }
}

namespace {

struct SplitCore {
    Tri status = Tri::no;
    std::vector<Matrix> complement_gens;  // generator actions on the complement
    std::optional<Matrix> witness;
};

SplitCore split_core(const std::vector<Matrix>& whole_gens, const std::vector<Matrix>& piece_gens,
                     int whole_deg, const HomBasis& into, const HomBasis& onto,
                     const SearchOptions& opts) {
    SplitCore out;
    if (into.rank() == 0 || onto.rank() == 0) return out;

    PairSearch ps = find_unit_pair(onto.mats, into.mats, opts);
    if (ps.outcome != SearchOutcome::found) {
        out.status = ps.outcome == SearchOutcome::none_certified ? Tri::no : Tri::indeterminate;
        return out;
    }

    const Matrix psi = sum_of(into.mats, ps.psi_bits);
    const Matrix phi = sum_of(onto.mats, ps.phi_bits);
    const Matrix comp = phi * psi;
    if (!is_unimodular(comp)) throw std::logic_error("split: phi psi not invertible");
    const Matrix e = psi * comp.inverse() * phi;
    if (!(e * e == e)) throw std::logic_error("split: projector not idempotent");

    const Matrix k = idempotent_image_basis(Matrix::identity(whole_deg) - e);
    Lattice lk(whole_deg, k);
    for (const Matrix& g : whole_gens) out.complement_gens.push_back(lk.coordinates_all(g * k));

    Matrix witness = psi.hstack(k);
    if (!is_unimodular(witness)) throw std::logic_error("split: change of basis not unimodular");
    for (size_t t = 0; t < whole_gens.size(); ++t)
        if (!(whole_gens[t] * witness == witness * piece_gens[t].direct_sum(out.complement_gens[t])))
            throw std::logic_error("split: witness fails to intertwine");

    out.status = Tri::yes;
    out.witness = std::move(witness);
    return out;
}

}  // namespace

SplitResult try_split_off(const Representation& whole, const Representation& piece,
                          const SearchOptions& opts) {
    SplitResult out;
    if (piece.degree() == 0 || piece.degree() > whole.degree()) return out;
    try {
        SplitCore core = split_core({whole.a1(), whole.a2(), whole.b()},
                                    {piece.a1(), piece.a2(), piece.b()}, whole.degree(),
                                    intertwiners(piece, whole), intertwiners(whole, piece), opts);
        out.status = core.status;
        if (core.status == Tri::yes) {
            out.complement = Representation(core.complement_gens[0], core.complement_gens[1],
                                            core.complement_gens[2]);
            out.witness = std::move(core.witness);
        }
    } catch (const std::runtime_error&) {
        return budget_indeterminate<SplitResult>();
    }
    return out;
}

SplitResultH try_split_off_h(const HRepresentation& whole, const HRepresentation& piece,
                             const SearchOptions& opts) {
    SplitResultH out;
    if (piece.degree() == 0 || piece.degree() > whole.degree()) return out;
    try {
        SplitCore core = split_core({whole.a1(), whole.a2()}, {piece.a1(), piece.a2()},
                                    whole.degree(), intertwiners_h(piece, whole),
                                    intertwiners_h(whole, piece), opts);
        out.status = core.status;
        if (core.status == Tri::yes) {
            out.complement = HRepresentation(core.complement_gens[0], core.complement_gens[1]);
            out.witness = std::move(core.witness);
        }
    } catch (const std::runtime_error&) {
        return budget_indeterminate<SplitResultH>();
    }
    return out;
}

Tri has_free_summand_h(const HRepresentation& m, const SearchOptions& opts) {
    return try_split_off_h(m, regular_h_rep(), opts).status;
}

int Decomposition::multiplicity_of(const std::string& label) const {
    for (const auto& [l, c] : multiplicities)
        if (l == label) return c;
    return 0;
}

Decomposition decompose(const Representation& whole, const std::vector<RegistryEntry>& registry,
                        const SearchOptions& opts) {
    std::vector<size_t> order_idx(registry.size());
    for (size_t i = 0; i < registry.size(); ++i) order_idx[i] = i;
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        return registry[a].rep.degree() > registry[b].rep.degree();
    });

    Decomposition dec;
    dec.witness = Matrix::identity(whole.degree());
    Representation cur = whole;
    int offset = 0;
    std::vector<int> counts(registry.size(), 0);
    bool saw_indeterminate = false;

    while (cur.degree() > 0) {
        bool progressed = false;
        for (size_t idx : order_idx) {
            const RegistryEntry& cand = registry[idx];
            if (cand.rep.degree() > cur.degree()) continue;
            SplitResult sr = try_split_off(cur, cand.rep, opts);
            if (sr.status == Tri::yes) {
                ++counts[idx];
                dec.order.push_back(cand.label);
                dec.witness = dec.witness * Matrix::identity(offset).direct_sum(*sr.witness);
                offset += cand.rep.degree();
                cur = *sr.complement;
                progressed = true;
                break;
            }
            if (sr.status == Tri::indeterminate) saw_indeterminate = true;
        }
        if (!progressed) break;
    }

    for (size_t i = 0; i < registry.size(); ++i)
        if (counts[i] > 0) dec.multiplicities.emplace_back(registry[i].label, counts[i]);
    if (cur.degree() > 0) {
        dec.remainder = cur;
        dec.remainder_character = cur.character();
        dec.indeterminate = saw_indeterminate;
    }

    // end-to-end witness check: whole conjugates onto the recorded sum
    std::optional<Representation> sum;
    auto append = [&](const Representation& p) { sum = sum ? direct_sum(*sum, p) : p; };
    for (const auto& label : dec.order)
        for (const auto& ent : registry)
            if (ent.label == label) { append(ent.rep); break; }
    if (dec.remainder) append(*dec.remainder);
    if (sum) {
        if (!is_unimodular(dec.witness)) throw std::logic_error("decompose: witness not unimodular");
        if (!(whole.a1() * dec.witness == dec.witness * sum->a1()) ||
            !(whole.a2() * dec.witness == dec.witness * sum->a2()) ||
            !(whole.b() * dec.witness == dec.witness * sum->b()))
            throw std::logic_error("decompose: witness fails to intertwine");
    }
    return dec;
}

}  // namespace a4ring
