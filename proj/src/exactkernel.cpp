#include "a4ring/exactkernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "a4ring/f2.hpp"

namespace a4ring {
namespace {

constexpr int kPrimeCap = 219;  // ~6800 bits of modulus

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t base, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

// 31-bit primes in fixed descending order; primality is a performance
// heuristic only (a composite modulus is caught by exact verification)
std::vector<uint32_t>& prime_pool() {
    static std::vector<uint32_t> pool;
    return pool;
}

uint32_t nth_prime(size_t idx) {
    auto& pool = prime_pool();
    static uint32_t cursor = 0x7fffffffu + 2u;  // next candidate is cursor - 2
    while (pool.size() <= idx) {
        cursor -= 2;
        mpz_class c(cursor);
        if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) pool.push_back(cursor);
    }
    return pool[idx];
}

struct ModRref {
    uint32_t p = 0;
    std::vector<int> pivots;
    // entries R[i][f] for pivot row i and free column f, row-major over
    // (pivots.size() x free.size()); free columns in increasing order
    std::vector<uint32_t> body;
};

ModRref rref_mod(const ZMat& m, uint32_t p) {
    const int r = m.rows, c = m.cols;
    std::vector<uint32_t> a(static_cast<size_t>(r) * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            a[static_cast<size_t>(i) * c + j] =
                static_cast<uint32_t>(mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p));

    ModRref out;
    out.p = p;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (a[static_cast<size_t>(i) * c + col]) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j < c; ++j)
                std::swap(a[static_cast<size_t>(piv) * c + j], a[static_cast<size_t>(row) * c + j]);
        uint64_t inv = invmod(a[static_cast<size_t>(row) * c + col], p);
        uint32_t* pr = &a[static_cast<size_t>(row) * c];
        for (int j = col; j < c; ++j) pr[j] = static_cast<uint32_t>(mulmod(pr[j], inv, p));
        for (int i = 0; i < r; ++i) {
            if (i == row) continue;
            uint64_t f = a[static_cast<size_t>(i) * c + col];
            if (!f) continue;
            uint64_t nf = p - f;
            uint32_t* ri = &a[static_cast<size_t>(i) * c];
            for (int j = col; j < c; ++j)
                ri[j] = static_cast<uint32_t>((ri[j] + nf * pr[j]) % p);
        }
        out.pivots.push_back(col);
        ++row;
    }

    std::vector<char> is_pivot(c, 0);
    for (int pc : out.pivots) is_pivot[pc] = 1;
    const size_t nfree = static_cast<size_t>(c) - out.pivots.size();
    out.body.resize(out.pivots.size() * nfree);
    size_t k = 0;
    for (size_t i = 0; i < out.pivots.size(); ++i)
        for (int j = 0; j < c; ++j)
            if (!is_pivot[j]) out.body[k++] = a[i * c + j];
    return out;
}

// Wang-style rational reconstruction of x mod m with |num|,den <= sqrt(m/2)
bool rat_reconstruct(const mpz_class& x, const mpz_class& m, mpq_class& out) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class((m - 1) / 2).get_mpz_t());
    mpz_class r0 = m, r1 = x, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
    mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
    if (den > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(num == 0 && den == 1)) return false;
    out = mpq_class(num, den);
    out.canonicalize();
    return true;
}

bool verify_kernel_vectors(const ZMat& m, const std::vector<std::vector<mpq_class>>& basis) {
    for (const auto& v : basis) {
        mpz_class den = 1;
        for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> num(v.size());
        for (size_t j = 0; j < v.size(); ++j) num[j] = v[j].get_num() * (den / v[j].get_den());
        for (int i = 0; i < m.rows; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < m.cols; ++j) {
                const mpz_class& e = m.at(i, j);
                if (sgn(e) != 0 && sgn(num[j]) != 0) acc += e * num[j];
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace

ZMat zmat_of(const Matrix& m) {
    ZMat z;
    z.rows = m.rows();
    z.cols = m.cols();
    z.a.resize(static_cast<size_t>(z.rows) * z.cols);
    for (int i = 0; i < z.rows; ++i) {
        mpz_class den = 1;
        for (int j = 0; j < z.cols; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).mpq().get_den().get_mpz_t());
        for (int j = 0; j < z.cols; ++j) {
            const mpq_class& q = m.at(i, j).mpq();
            z.at(i, j) = q.get_num() * (den / q.get_den());
        }
    }
    return z;
}

ZMat zmat_of(const QMat& m) {
    ZMat z;
    z.rows = m.rows;
    z.cols = m.cols;
    z.a.resize(static_cast<size_t>(z.rows) * z.cols);
    for (int i = 0; i < z.rows; ++i) {
        mpz_class den = 1;
        for (int j = 0; j < z.cols; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < z.cols; ++j) {
            const mpq_class& q = m.at(i, j);
            z.at(i, j) = q.get_num() * (den / q.get_den());
        }
    }
    return z;
}

KernelResult kernel_of(const ZMat& m) {
    if (m.cols == 0) return {0, {}};
    if (m.rows == 0) {
        KernelResult res;
        res.rank = 0;
        res.basis.assign(m.cols, std::vector<mpq_class>(m.cols, 0));
        for (int j = 0; j < m.cols; ++j) res.basis[j][j] = 1;
        return res;
    }

    std::vector<ModRref> reds;
    size_t used = 0;
    for (size_t round = 1;; round *= 2) {
        size_t target = std::min<size_t>(used + round, kPrimeCap);
        if (target == used) break;
        while (used < target) reds.push_back(rref_mod(m, nth_prime(used++)));

        // consensus signature: maximal rank, then lexicographically least pivots
        const std::vector<int>* best = nullptr;
        for (const auto& r : reds)
            if (!best || r.pivots.size() > best->size() ||
                (r.pivots.size() == best->size() && r.pivots < *best))
                best = &r.pivots;
        std::vector<const ModRref*> match;
        for (const auto& r : reds)
            if (r.pivots == *best) match.push_back(&r);

        const auto& pivots = *best;
        const int rank = static_cast<int>(pivots.size());
        std::vector<int> free_cols;
        {
            std::vector<char> is_pivot(m.cols, 0);
            for (int pc : pivots) is_pivot[pc] = 1;
            for (int j = 0; j < m.cols; ++j)
                if (!is_pivot[j]) free_cols.push_back(j);
        }

        // CRT each needed entry across matching primes, then reconstruct
        const size_t nent = static_cast<size_t>(rank) * free_cols.size();
        std::vector<mpq_class> entry(nent);
        bool ok = true;
        mpz_class modulus = 1;
        std::vector<mpz_class> acc(nent, 0);
        for (const ModRref* r : match) {
            uint64_t p = r->p;
            uint64_t minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            for (size_t k = 0; k < nent; ++k) {
                uint64_t cur = mpz_fdiv_ui(acc[k].get_mpz_t(), p);
                uint64_t diff = (r->body[k] + p - cur) % p;
                acc[k] += modulus * mpz_class(static_cast<unsigned long>(mulmod(diff, minv, p)));
            }
            modulus *= static_cast<unsigned long>(p);
        }
        for (size_t k = 0; k < nent && ok; ++k)
            ok = rat_reconstruct(acc[k], modulus, entry[k]);

        if (ok) {
            KernelResult res;
            res.rank = rank;
            res.basis.assign(free_cols.size(), std::vector<mpq_class>(m.cols, 0));
            for (size_t f = 0; f < free_cols.size(); ++f) {
                res.basis[f][free_cols[f]] = 1;
                for (int i = 0; i < rank; ++i)
                    res.basis[f][pivots[i]] = -entry[static_cast<size_t>(i) * free_cols.size() + f];
            }
            // basis vectors are independent by construction (unit in their own
            // free coordinate); M*v = 0 plus count = cols - rank_p certifies rank
            if (verify_kernel_vectors(m, res.basis)) return res;
        }
    }
    throw std::runtime_error("kernel_of: modular reconstruction failed");
}

QMat solve_in_span_q(const QMat& b, const QMat& t) {
    if (b.rows != t.rows) throw std::invalid_argument("solve_in_span: row mismatch");
    const int cb = b.cols, ct = t.cols;
    QMat aug(b.rows, cb + ct);
    for (int i = 0; i < b.rows; ++i) {
        for (int j = 0; j < cb; ++j) aug.at(i, j) = b.at(i, j);
        for (int j = 0; j < ct; ++j) aug.at(i, cb + j) = t.at(i, j);
    }
    KernelResult kr = kernel_of(zmat_of(aug));
    if (kr.rank != cb)
        throw std::domain_error("solve_in_span: basis rank-deficient or target outside span");
    // rank certified = cb, so kernel vectors are parametrized by the t-block;
    // with free columns exactly cb..cb+ct-1 each vector solves one column
    QMat x(cb, ct);
    for (const auto& v : kr.basis) {
        int which = -1;
        for (int j = 0; j < ct; ++j) {
            if (v[cb + j] == 0) continue;
            if (which >= 0 || v[cb + j] != 1)
                throw std::domain_error("solve_in_span: target outside span");
            which = j;
        }
        if (which < 0) throw std::domain_error("solve_in_span: basis rank-deficient");
        for (int i = 0; i < cb; ++i) x.at(i, which) = -v[i];
    }
    return x;
}

QMat solve_in_span(const Matrix& b, const Matrix& t) {
    QMat qb(b.rows(), b.cols()), qt(t.rows(), t.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) qb.at(i, j) = b.at(i, j).mpq();
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) qt.at(i, j) = t.at(i, j).mpq();
    return solve_in_span_q(qb, qt);
}

std::vector<std::vector<mpq_class>> saturate_columns(std::vector<std::vector<mpq_class>> cols, int ambient) {
    auto norm = [&](std::vector<mpq_class>& v) {
        long lo = 0;
        bool seen = false;
        for (const auto& q : v) {
            if (q == 0) continue;
            long val = static_cast<long>(mpz_scan1(q.get_num().get_mpz_t(), 0)) -
                       static_cast<long>(mpz_scan1(q.get_den().get_mpz_t(), 0));
            if (!seen || val < lo) { lo = val; seen = true; }
        }
        if (!seen) throw std::invalid_argument("saturate_columns: zero column");
        if (lo == 0) return;
        mpq_class s;
        if (lo > 0) s = mpq_class(1, mpz_class(1) << lo);
        else s = mpq_class(mpz_class(1) << (-lo), 1);
        for (auto& q : v) { q *= s; q.canonicalize(); }
    };
    for (auto& v : cols) norm(v);

    for (int guard = 0; guard < 1 << 20; ++guard) {
        F2Matrix par(ambient, static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < ambient; ++i) {
                const mpq_class& q = cols[j][i];
                if (q != 0 && mpz_odd_p(q.get_num().get_mpz_t())) {
                    long val = static_cast<long>(mpz_scan1(q.get_num().get_mpz_t(), 0)) -
                               static_cast<long>(mpz_scan1(q.get_den().get_mpz_t(), 0));
                    if (val == 0) par.set(i, static_cast<int>(j), true);
                }
            }
        auto deps = par.nullspace();
        if (deps.empty()) return cols;
        const auto& d = deps.front();
        std::vector<mpq_class> w(ambient, 0);
        int hi = -1;
        for (size_t j = 0; j < cols.size(); ++j)
            if ((d[j >> 6] >> (j & 63)) & 1) {
                for (int i = 0; i < ambient; ++i) w[i] += cols[j][i];
                hi = static_cast<int>(j);
            }
        if (hi < 0) throw std::logic_error("saturate_columns: empty dependency");
        for (int i = 0; i < ambient; ++i) {
            w[i] /= 2;
            w[i].canonicalize();
        }
        cols[static_cast<size_t>(hi)] = std::move(w);
        norm(cols[static_cast<size_t>(hi)]);
    }
    throw std::logic_error("saturate_columns: did not terminate");
}

}  // namespace a4ring
