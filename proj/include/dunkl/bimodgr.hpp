#ifndef DUNKL_BIMODGR_HPP
#define DUNKL_BIMODGR_HPP

#include "dunkl/cherednik.hpp"
#include "dunkl/isotypic.hpp"

namespace dunkl {

enum class Side { Q, P };

struct GrBounds {
    int dx = 4;
    int dy = 4;
};

/// Spanning set for Q_{c-m,c} up to filtration degree: m = 1 gives the
/// sandwiches e delta^{-1} x^a D_kappa(y)^b e, and m >= 2 chains m such
/// factors with the Dunkl parameter stepping kappa-(m-1), ..., kappa.
std::vector<SkewOperator> q_spanning_set(int n, int m, GrBounds bounds, int slack,
                                         const FieldScalar& kappa = FieldScalar::c());

/// Mirror spanning set for P_{c,c-m}: sandwiches e x^a D_kappa(y)^b delta e,
/// parameters stepping kappa, ..., kappa-(m-1) left to right.
std::vector<SkewOperator> p_spanning_set(int n, int m, GrBounds bounds, int slack,
                                         const FieldScalar& kappa = FieldScalar::c());

/// Bihomogeneous spherical symbols grouped by bidegree. The x-degree of a
/// component p/delta^k is deg_x(p) - k*N with N = deg delta.
struct SymbolTable {
    int n = 0;
    std::map<Bidegree, std::vector<LocPoly>> rows;

    DimensionTable dimensions() const; // exact rank per bidegree
};

SymbolTable gr_dimension_table(const std::vector<SkewOperator>& spanning, int n);

enum class CellStatus { match, deficit, overflow };

struct GrCell {
    int span_dim = 0;
    int target_dim = 0;
    CellStatus status = CellStatus::match;
    bool contained = true; // every symbol lies in the span of the target basis
};

struct GrComparison {
    int n = 0;
    int m = 0;
    Side side = Side::Q;
    GrBounds bounds;
    int slack = 0;
    std::map<Bidegree, GrCell> table;

    bool any_overflow() const;
    bool all_contained() const;
    /// match at every bidegree with 0 <= i <= dx and 0 <= j <= dy.
    bool trusted_region_match() const;
};

/// Targets: dim A^m at (i + mN, j) for side Q (gr = delta^{-m} A^m e) and
/// at (i - mN, j) for side P (gr = A^m delta^m e).
GrComparison compare_with_target(const SymbolTable& table, int n, int m, Side side,
                                 GrBounds bounds, int slack);

/// Exact rank of a family of delta-localized polynomials over Q(c), after
/// clearing to a common delta power.
int locpoly_rank(const std::vector<LocPoly>& rows);

} // namespace dunkl

#endif
