#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/center.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Complete-symmetric generating function H(z, J) = prod_b 1/(1 - z J_b).
/// With value set, z is that rational number instead of a formal parameter.
struct HAtom {
    std::string param;
    std::optional<Rational> value;
};
/// Elementary generating function E(w, J) = prod_b (1 + w J_b).
struct EAtom {
    std::string param;
    std::optional<Rational> value;
};
/// e^{theta_0 P_0 + beta P_1}. scale_param names q = e^{theta_0} (empty: theta_0 = 0);
/// beta is expanded as a series.
struct ExpAtom {
    std::string scale_param;
    std::string beta_param;
};
/// (factor * q)^{P_0}; an empty param means a pure rational base.
struct ScaleAtom {
    std::string param;
    Rational factor{1};
};

using TwistAtom = std::variant<HAtom, EAtom, ExpAtom, ScaleAtom>;

/// Product of twist atoms (an element of the abelian group generated by
/// e^{sum theta_i P_i(J)}), with a degree cap per formal parameter.
class TwistSpec {
public:
    TwistSpec() = default;
    /// Throws ArgumentError on repeated parameter names or missing caps.
    TwistSpec(std::vector<TwistAtom> atoms, std::map<std::string, int> caps);

    static TwistSpec plain(int beta_cap);                 ///< e^{beta P_1}
    static TwistSpec monotone(int z_cap);                 ///< H(z)
    static TwistSpec strict(int w_cap);                   ///< E(w)
    static TwistSpec okounkov(int q_cap, int beta_cap);   ///< e^{ln q P_0 + beta P_1}

    const std::vector<TwistAtom>& atoms() const { return atoms_; }
    const std::map<std::string, int>& caps() const { return caps_; }
    int cap(const std::string& param) const;
    /// Short label such as "H", "E", "Exp", "H*E".
    std::string label() const;
    /// Product of two twists (parameter names must stay distinct).
    TwistSpec operator*(const TwistSpec& other) const;

private:
    std::vector<TwistAtom> atoms_;
    std::map<std::string, int> caps_;
};

/// Default cap used for the q-grading parameter (exponent is the sheet count).
inline constexpr int kDefaultScaleCap = 16;

/// Eigenvalue function lambda -> G(cont(lambda)).
using EigenvalueFn = std::function<TruncSeries(const Partition&)>;

/// Content product of the twist on F_lambda (SingularParameterError when a
/// rational z hits 1 - z c = 0):
/// H: prod 1/(1 - z c); E: prod (1 + w c); Exp: q^{|lambda|} e^{beta cont_lambda};
/// Scale: (factor q)^{|lambda|}.
TruncSeries twist_eigenvalue(const TwistSpec& t, const Partition& lambda);
EigenvalueFn eigenvalue_fn(const TwistSpec& t);

/// G_{lambda mu} for all lambda, mu |- n in canonical order.
struct ConnectionMatrix {
    int n = 0;
    std::vector<Partition> order;
    std::vector<TruncSeries> entries; ///< row-major, index lambda * dim + mu

    std::size_t dim() const { return order.size(); }
    const TruncSeries& operator()(std::size_t lambda, std::size_t mu) const { return entries[lambda * dim() + mu]; }
    const TruncSeries& at(const Partition& lambda, const Partition& mu) const;
};

/// G_{lambda mu} = (1/Z_lambda) sum_nu G(cont(nu)) chi_nu(lambda) chi_nu(mu).
ConnectionMatrix connection_coeffs(const TwistSpec& t, int n);
ConnectionMatrix connection_coeffs(const EigenvalueFn& eigen, int n);
/// Matrix product in the class basis: (A B)_{lambda mu} = sum_nu A_{lambda nu} B_{nu mu}.
ConnectionMatrix compose(const ConnectionMatrix& a, const ConnectionMatrix& b);

/// Multiplication by G(J): diagonal on idempotents; result in v's basis.
CenterElement apply_twist(const TwistSpec& t, const CenterElement& v);
CenterElement apply_twist(const EigenvalueFn& eigen, const CenterElement& v);

} // namespace hurwitz
