#pragma once

#include "supertube/error.hpp"
#include "supertube/exact/matrix.hpp"
#include "supertube/superalg/grassmann.hpp"

#include <string>
#include <vector>

namespace supertube::superalg {

struct SuperDim {
    int p = 0;  // even
    int q = 0;  // odd
    int total() const { return p + q; }
    friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

using GMatrix = exact::Matrix<GrassmannElement>;

// Raised when an entry breaks the block parity of an even supermatrix; the
// message names the entry and its block.
class EvennessError : public DomainError {
public:
    using DomainError::DomainError;
};

// Even (p|q) x (p|q) supermatrix over the Grassmann algebra. Entries of the
// diagonal blocks M00, M11 are even, entries of M01, M10 are odd; zero
// qualifies as both. Checked at construction.
class SuperMatrix {
public:
    SuperMatrix(SuperDim dim, GMatrix entries);

    static SuperMatrix identity(SuperDim dim, int generators = 0);
    static SuperMatrix zero(SuperDim dim, int generators = 0);
    // diag(lambda_1..lambda_p; mu_1..mu_q)
    static SuperMatrix diagonal(const std::vector<exact::Rational>& even, const std::vector<exact::Rational>& odd,
                                int generators = 0);
    // Block-diagonal matrix with rational blocks.
    static SuperMatrix from_rational_blocks(const exact::QMatrix& a00, const exact::QMatrix& a11, int generators = 0);
    static SuperMatrix from_blocks(const GMatrix& m00, const GMatrix& m01, const GMatrix& m10, const GMatrix& m11);

    SuperDim dim() const { return dim_; }
    int generators() const { return generators_; }
    const GMatrix& entries() const { return entries_; }
    const GrassmannElement& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    GMatrix m00() const;
    GMatrix m01() const;
    GMatrix m10() const;
    GMatrix m11() const;

    // Every entry is a rational multiple of 1 (so off-diagonal blocks vanish).
    bool scalar_bodied() const;
    exact::QMatrix to_rational() const;  // requires scalar_bodied()

    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const exact::Rational& s, const SuperMatrix& a);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    SuperDim dim_;
    int generators_ = 0;
    GMatrix entries_;
};

GrassmannElement g_zero(int generators);
GrassmannElement g_one(int generators);

// Determinant and adjugate of a matrix with pairwise commuting (even)
// entries.
GrassmannElement even_determinant(const GMatrix& m, int generators);
GMatrix even_adjugate(const GMatrix& m, int generators);
// adj(m) / det(m); throws SingularError when det(m) has zero body.
GMatrix even_inverse(const GMatrix& m, int generators);

// det(M00 - M01 M11^{-1} M10) / det(M11). Throws SingularError
// ("Berezinian undefined") when det M11 has zero body.
GrassmannElement berezinian(const SuperMatrix& m);

// tr M00 - tr M11
GrassmannElement supertrace(const SuperMatrix& m);

// Block inverse; both diagonal blocks must be invertible.
SuperMatrix inverse(const SuperMatrix& m);

}  // namespace supertube::superalg
