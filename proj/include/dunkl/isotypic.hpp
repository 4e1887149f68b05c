#ifndef DUNKL_ISOTYPIC_HPP
#define DUNKL_ISOTYPIC_HPP

#include <map>
#include <utility>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

enum class Character { triv, sign };

using Bidegree = std::pair<int, int>; // (x-degree, y-degree)

/// Echelon basis of a subspace of C[h x h*] over Q(c). Pivot = smallest
/// monomial in the fixed term order; rows are kept pivot-normalized.
class PolyEchelon {
  public:
    /// Reduces p against the current rows; adds the remainder as a new row
    /// when nonzero. Returns true iff the rank grew.
    bool insert(Poly p);

    bool in_span(Poly p) const;
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Rows in pivot order (deterministic).
    std::vector<Poly> basis() const;

  private:
    Poly reduce(Poly p) const;
    std::map<Monomial, Poly, MonomialOrder> rows_;
};

struct IsotypicBasis {
    int n;
    Character character;
    Bidegree bidegree;
    std::vector<Poly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Basis of the chi-isotypic component of C[h x h*] in one bidegree,
/// by brute-force character averaging of monomials plus exact elimination.
IsotypicBasis isotypic_basis(int n, Character character, Bidegree bidegree);

/// Basis of A^m = (A^1)^m in one bidegree, where A^1 = C[h x h*]^sign and
/// A^0 = C[h x h*]^W. Products of A^1 bases, reduced exactly. Memoized.
const IsotypicBasis& a_power_basis(int n, int m, Bidegree bidegree);

/// Rank of a dense matrix over Q(c) by exact elimination.
int exact_rank(const std::vector<std::vector<FieldScalar>>& rows);

/// Coefficient of q^i t^j in the Molien series
/// (1/n!) sum_w chi(w) / (det(1 - q w) det(1 - t w)).
int molien_dimension(int n, Character character, Bidegree bidegree);

struct DimensionTable {
    std::map<Bidegree, int> dims;

    int at(Bidegree b) const {
        auto it = dims.find(b);
        return it == dims.end() ? 0 : it->second;
    }
};

} // namespace dunkl

#endif
