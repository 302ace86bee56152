#pragma once

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/symfunc.hpp"

namespace hurwitz {

enum class CenterBasis { ClassSums, Idempotents };

/// Element of the center Z(C[S_n]) as coordinates over partitions of n,
/// either on the class sums C_mu or on the orthogonal idempotents F_lambda.
/// Coordinates are series so twisted results fit the same type; plain
/// elements simply have constant coordinates.
struct CenterElement {
    int n = 0;
    CenterBasis basis = CenterBasis::ClassSums;
    std::map<Partition, TruncSeries> coords;

    static CenterElement unit(int n, CenterBasis basis, const Partition& p);
    void add(const Partition& p, const TruncSeries& c);
    TruncSeries coordinate(const Partition& p) const;
    /// Coefficient of one monomial in every coordinate.
    CenterElement slice(const TruncSeries::Monomial& exps) const;

    friend bool operator==(const CenterElement& a, const CenterElement& b);
};

/// C_mu = (1/Z_mu) sum_lambda h_lambda chi_lambda(mu) F_lambda.
CenterElement class_to_idem(const CenterElement& v);
/// F_lambda = (1/h_lambda) sum_mu chi_lambda(mu) C_mu.
CenterElement idem_to_class(const CenterElement& v);
CenterElement to_basis(const CenterElement& v, CenterBasis basis);

/// Product in the center, computed diagonally on the idempotents
/// (F_l F_l = F_l, F_l F_m = 0). The result is in u's basis.
CenterElement center_multiply(const CenterElement& u, const CenterElement& v);

/// Frobenius characteristic map: C_mu -> p_mu / Z_mu, F_lambda -> S_lambda / h_lambda.
/// Coordinates must be constant series.
SymFunc characteristic_map(const CenterElement& v);

} // namespace hurwitz
