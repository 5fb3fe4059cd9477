#ifndef ISOZERO_LINALG_HPP
#define ISOZERO_LINALG_HPP

#include <vector>

#include "isozero/algnum.hpp"

namespace isozero {

using FVec = std::vector<FieldElement>;

bool fvec_is_zero(const FVec& v);
FVec fvec_add(const FVec& a, const FVec& b);
FVec fvec_sub(const FVec& a, const FVec& b);
FVec fvec_scale(const FVec& a, const FieldElement& s);
FieldElement fvec_dot(const FVec& a, const FVec& b);

// Dense matrix over one number field. Deterministic exact elimination with
// first-nonzero pivoting throughout.
class FMat {
public:
    FMat() = default;
    FMat(NumberField K, int rows, int cols);
    static FMat identity(const NumberField& K, int n);
    static FMat from_columns(const NumberField& K, const std::vector<FVec>& cols);
    static FMat from_rows(const NumberField& K, const std::vector<FVec>& rows);

    const NumberField& field() const { return K_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldElement& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    FVec column(int j) const;
    FVec row(int i) const;
    std::vector<FVec> columns() const;

    FMat operator*(const FMat& o) const;
    FVec apply(const FVec& v) const; // A v
    FMat transpose() const;
    FMat hstack(const FMat& o) const;

    int rank() const;
    FieldElement det() const; // square only
    // basis of { x : A x = 0 } as columns
    std::vector<FVec> kernel() const;
    // indices of a maximal independent subset of columns (deterministic)
    std::vector<int> independent_columns() const;
    // solve A x = b; returns false when inconsistent
    bool solve(const FVec& b, FVec& x) const;
    // all L x L minors (L = cols), by lexicographic row combinations
    std::vector<FieldElement> maximal_minors() const;

private:
    NumberField K_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

} // namespace isozero

#endif
