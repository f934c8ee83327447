#ifndef COVERMETRIC_FIELD_HPP
#define COVERMETRIC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "covermetric/errors.hpp"

namespace covermetric {

// A field element is its index in [0, q). Read in base p, the digits of the
// index are the polynomial coefficients, constant term least significant.
// 0 is the additive identity, 1 the multiplicative identity.
using Elem = std::uint16_t;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(q), q = p^e <= 2^16, with the canonical modulus: the lexicographically
// smallest monic irreducible polynomial of degree e over GF(p), coefficient
// tuples compared high-degree-first. The choice is deterministic, so two
// FieldSpecs built from the same (p, e) are byte-identical, which the
// instance file format relies on. Immutable after construction.
class FieldSpec {
  public:
    static std::shared_ptr<const FieldSpec> make(std::uint32_t p, std::uint32_t e) {
        if (!is_prime_u32(p)) throw NonPrimeError("field_make: p = " + std::to_string(p) + " is not prime");
        if (e < 1) throw DomainError("field_make: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > 65536) throw FieldTooLargeError("field_make: p^e exceeds 2^16");
        }
        return std::shared_ptr<const FieldSpec>(new FieldSpec(p, e, static_cast<std::uint32_t>(q)));
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    // Modulus coefficients, index i = coefficient of x^i; size e+1, monic.
    // For e = 1 this is the placeholder x, which no operation uses.
    const std::vector<std::uint16_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        Elem r = 0;
        std::uint32_t pw = 1;
        std::uint32_t x = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint32_t d = x % p_;
            x /= p_;
            r = static_cast<Elem>(r + ((p_ - d) % p_) * pw);
            pw *= p_;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZeroError("inv(0)");
        return exp_[q_ - 1 - log_[a]];
    }

    Elem div(Elem a, Elem b) const {
        if (b == 0) throw DivisionByZeroError("division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + q_ - 1 - log_[b]];
    }

    Elem pow(Elem a, std::uint64_t n) const {
        if (n == 0) return 1;
        if (a == 0) return 0;
        std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  private:
    FieldSpec(std::uint32_t p, std::uint32_t e, std::uint32_t q) : p_(p), e_(e), q_(q) {
        modulus_ = canonical_modulus();
        build_tables();
    }

    using Poly = std::vector<std::uint16_t>;  // coefficients, low to high

    static void poly_trim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    // Remainder of a mod b over GF(p); b monic-normalized internally.
    Poly poly_mod(Poly a, const Poly& b) const {
        poly_trim(a);
        int db = static_cast<int>(b.size()) - 1;
        std::uint32_t lead_inv = mod_inv_prime(b[db]);
        while (static_cast<int>(a.size()) - 1 >= db) {
            int da = static_cast<int>(a.size()) - 1;
            std::uint32_t c = (static_cast<std::uint32_t>(a[da]) * lead_inv) % p_;
            for (int i = 0; i <= db; ++i) {
                std::uint32_t sub = (c * b[i]) % p_;
                std::uint32_t idx = da - db + i;
                a[idx] = static_cast<std::uint16_t>((a[idx] + p_ - sub) % p_);
            }
            poly_trim(a);
        }
        return a;
    }

    Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) const {
        Poly r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = static_cast<std::uint16_t>((r[i + j] + static_cast<std::uint32_t>(a[i]) * b[j]) % p_);
        }
        return poly_mod(std::move(r), mod);
    }

    std::uint32_t mod_inv_prime(std::uint32_t a) const {
        // Fermat inverse in Z/p.
        std::uint32_t r = 1, base = a % p_, n = p_ - 2;
        while (n) {
            if (n & 1) r = (r * base) % p_;
            base = (base * base) % p_;
            n >>= 1;
        }
        return r;
    }

    Poly index_to_poly(std::uint32_t v, std::uint32_t deg) const {
        // v encodes coefficients (c_{deg-1}, ..., c_0) base p, c_{deg-1} most
        // significant, so ascending v is exactly high-degree-first lex order.
        Poly c(deg + 1, 0);
        c[deg] = 1;
        for (int i = 0; i < static_cast<int>(deg); ++i) {
            c[i] = static_cast<std::uint16_t>(v % p_);
            v /= p_;
        }
        return c;
    }

    bool poly_is_zero(const Poly& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }

    bool irreducible(const Poly& f) const {
        std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
        for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint32_t v = 0; v < count; ++v) {
                Poly g = index_to_poly(v, d);
                if (poly_is_zero(poly_mod(f, g))) return false;
            }
        }
        return true;
    }

    Poly canonical_modulus() const {
        if (e_ == 1) return Poly{0, 1};
        for (std::uint32_t v = 0; v < q_; ++v) {
            Poly f = index_to_poly(v, e_);
            if (irreducible(f)) return f;
        }
        throw Error("no irreducible polynomial found");  // unreachable
    }

    Elem poly_to_elem(const Poly& a) const {
        std::uint32_t v = 0, pw = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (i < a.size()) v += a[i] * pw;
            pw *= p_;
        }
        return static_cast<Elem>(v);
    }

    Poly elem_to_poly(Elem a) const {
        Poly c(e_, 0);
        std::uint32_t x = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            c[i] = static_cast<std::uint16_t>(x % p_);
            x /= p_;
        }
        return c;
    }

    Elem add_digits(Elem a, Elem b) const {
        std::uint32_t r = 0, pw = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += ((x % p_) + (y % p_)) % p_ * pw;
            x /= p_;
            y /= p_;
            pw *= p_;
        }
        return static_cast<Elem>(r);
    }

    void build_tables() {
        // Generator of the multiplicative group: smallest element index whose
        // order is q-1, found with the prime factors of q-1.
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t n = q_ - 1;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) prime_factors.push_back(n);

        auto raw_pow = [this](Elem a, std::uint32_t exp) {
            Poly r{1}, base = elem_to_poly(a);
            while (exp) {
                if (exp & 1) r = poly_mulmod(r, base, modulus_);
                base = poly_mulmod(base, base, modulus_);
                exp >>= 1;
            }
            return poly_to_elem(r);
        };

        Elem g = 0;
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (auto r : prime_factors) {
                if (raw_pow(static_cast<Elem>(cand), (q_ - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = static_cast<Elem>(cand);
                break;
            }
        }
        if (g == 0 && q_ > 2) throw Error("no primitive element found");  // unreachable
        if (q_ == 2) g = 1;

        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Poly cur{1};
        Poly gp = elem_to_poly(g);
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            Elem v = poly_to_elem(cur);
            exp_[i] = v;
            exp_[i + q_ - 1] = v;
            log_[v] = static_cast<std::uint16_t>(i);
            cur = poly_mulmod(cur, gp, modulus_);
        }

        if (p_ != 2 && q_ <= 256) {
            add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[static_cast<std::size_t>(a) * q_ + b] =
                        add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }

    std::uint32_t p_, e_, q_;
    Poly modulus_;
    std::vector<Elem> exp_, log_;
    std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

inline FieldPtr make_field(std::uint32_t p, std::uint32_t e) { return FieldSpec::make(p, e); }

// Factor a prime power q = p^e; used by CLI flags that take q directly.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw DomainError("q must be >= 2");
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t e = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) throw NonPrimeError("q = " + std::to_string(q) + " is not a prime power");
        return {p, e};
    }
    throw NonPrimeError("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace covermetric

#endif  // COVERMETRIC_FIELD_HPP
