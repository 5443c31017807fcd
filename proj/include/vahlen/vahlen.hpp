#pragma once

// 2x2 matrices over a Clifford algebra, the pseudo-determinant, the monoid
// T(N, q), and the three definitions of the Vahlen group, each checkable
// clause by clause.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vahlen/clifford.hpp"

namespace vahlen {

class CliffordMatrix2 {
  public:
    CliffordMatrix2(CliffordElement alpha, CliffordElement beta, CliffordElement gamma,
                    CliffordElement delta)
        : a_(std::move(alpha)), b_(std::move(beta)), c_(std::move(gamma)), d_(std::move(delta)) {
        require_same_space(a_.space(), b_.space());
        require_same_space(a_.space(), c_.space());
        require_same_space(a_.space(), d_.space());
    }

    static CliffordMatrix2 identity(const SpacePtr& S) {
        CliffordElement one = CliffordElement::one(S);
        CliffordElement zero = CliffordElement::zero(S);
        return {one, zero, zero, one};
    }

    static CliffordMatrix2 zero(const SpacePtr& S) {
        CliffordElement z = CliffordElement::zero(S);
        return {z, z, z, z};
    }

    const CliffordElement& alpha() const { return a_; }
    const CliffordElement& beta() const { return b_; }
    const CliffordElement& gamma() const { return c_; }
    const CliffordElement& delta() const { return d_; }
    const SpacePtr& space() const { return a_.space(); }

    friend CliffordMatrix2 operator*(const CliffordMatrix2& x, const CliffordMatrix2& y) {
        return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
    }

    friend CliffordMatrix2 operator+(const CliffordMatrix2& x, const CliffordMatrix2& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
    }

    CliffordMatrix2 scaled(const RingElement& c) const {
        return {a_.scaled(c), b_.scaled(c), c_.scaled(c), d_.scaled(c)};
    }

    friend bool operator==(const CliffordMatrix2& x, const CliffordMatrix2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const CliffordMatrix2& x, const CliffordMatrix2& y) { return !(x == y); }

    // "alpha; beta; gamma; delta"
    std::string to_string() const {
        return a_.to_string() + "; " + b_.to_string() + "; " + c_.to_string() + "; " +
               d_.to_string();
    }

  private:
    CliffordElement a_, b_, c_, d_;
};

// alpha delta^t - beta gamma^t.
inline CliffordElement pseudo_det(const CliffordMatrix2& g) {
    return g.alpha() * g.delta().transpose() - g.beta() * g.gamma().transpose();
}

// Entrywise involutions.  Grade: (a', -b'; -c', d').  Transpose:
// (delta-bar, beta-bar; gamma-bar, alpha-bar).  Conjugate:
// (delta^t, -beta^t; -gamma^t, alpha^t).
inline CliffordMatrix2 mat_grade(const CliffordMatrix2& g) {
    return {g.alpha().grade_involution(), -g.beta().grade_involution(),
            -g.gamma().grade_involution(), g.delta().grade_involution()};
}

inline CliffordMatrix2 mat_transpose(const CliffordMatrix2& g) {
    return {g.delta().conjugate(), g.beta().conjugate(), g.gamma().conjugate(),
            g.alpha().conjugate()};
}

inline CliffordMatrix2 mat_conjugate(const CliffordMatrix2& g) {
    return {g.delta().transpose(), -g.beta().transpose(), -g.gamma().transpose(),
            g.alpha().transpose()};
}

// When the pseudo-determinant is a scalar unit,
// g^-1 = pd^-1 (delta^t, -beta^t; -gamma^t, alpha^t).
inline std::optional<CliffordMatrix2> mat_inverse(const CliffordMatrix2& g) {
    CliffordElement pd = pseudo_det(g);
    if (!pd.is_scalar() || !pd.scalar_value().is_unit())
        return std::nullopt;
    CliffordMatrix2 inv = mat_conjugate(g).scaled(pd.scalar_value().invert());
    CliffordMatrix2 id = CliffordMatrix2::identity(g.space());
    if (g * inv != id || inv * g != id)
        throw MismatchError("pseudo-determinant inverse failed to verify");
    return inv;
}

// The grading on MAT(2, Cl): even matrices have pattern (even, odd; odd,
// even), odd ones the reverse.  Zero entries pass both.
inline bool mat_is_even(const CliffordMatrix2& g) {
    return g.alpha().is_even() && g.beta().is_odd() && g.gamma().is_odd() && g.delta().is_even();
}

inline bool mat_is_odd(const CliffordMatrix2& g) {
    return g.alpha().is_odd() && g.beta().is_even() && g.gamma().is_even() && g.delta().is_odd();
}

// The monoid T(N, q): x != 0, N(x) scalar, and x N x^t inside N.  Checking
// the sandwich on the basis suffices by linearity of y -> x y x^t.
inline bool is_in_T(const CliffordElement& x) {
    if (x.is_zero())
        return false;
    if (!x.norm().is_scalar())
        return false;
    const SpacePtr& S = x.space();
    CliffordElement xt = x.transpose();
    for (std::size_t i = 0; i < S->rank(); ++i)
        if (!(x * CliffordElement::generator(S, i) * xt).is_vector())
            return false;
    return true;
}

// Exhaustive: x in T implies x^t in T, over all of Cl(N, q).
inline bool t_closed_under_transpose(const SpacePtr& S) {
    CliffordEnumeration en(S);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        CliffordElement x = en.at(i);
        if (is_in_T(x) && !is_in_T(x.transpose()))
            return false;
    }
    return true;
}

// --- the three definitions ----------------------------------------------

struct ClauseResult {
    std::string name;    // e.g. "(iv)"
    std::string description;
    bool pass = true;
    std::string witness; // first failing instance, empty when pass

    ClauseResult(std::string n, std::string d) : name(std::move(n)), description(std::move(d)) {}
};

struct ConditionReport {
    int definition = 0;
    bool member = false;
    std::vector<ClauseResult> clauses;

    const ClauseResult* first_failure() const {
        for (const auto& c : clauses)
            if (!c.pass)
                return &c;
        return nullptr;
    }
};

namespace detail {

inline void clause_fail(ClauseResult& c, const std::string& witness) {
    if (c.pass) {
        c.pass = false;
        c.witness = witness;
    }
}

inline bool scalar_unit(const CliffordElement& x) {
    return x.is_scalar() && x.scalar_value().is_unit();
}

// x together with 1 when paravector-style quantification is wanted.
inline std::vector<std::pair<std::string, CliffordElement>> module_basis(const SpacePtr& S,
                                                                         bool with_one) {
    std::vector<std::pair<std::string, CliffordElement>> out;
    if (with_one)
        out.emplace_back("1", CliffordElement::one(S));
    for (std::size_t i = 0; i < S->rank(); ++i)
        out.emplace_back("e" + std::to_string(i + 1), CliffordElement::generator(S, i));
    return out;
}

// Shared skeleton for the ordinary and paravector variants.  `in_module`
// tests membership in N (resp. R + L); `entry_ok` tests T (resp. PT)
// membership for definitions 1 and 2.
template <typename InModule, typename EntryOk>
inline ConditionReport check_definition_impl(const CliffordMatrix2& g, int which,
                                             bool paravector, InModule in_module,
                                             EntryOk entry_ok) {
    const SpacePtr& S = g.space();
    const CliffordElement &a = g.alpha(), &b = g.beta(), &c = g.gamma(), &d = g.delta();
    ConditionReport rep;
    rep.definition = which;

    auto wit = [](const std::string& expr, const CliffordElement& val) {
        return expr + " = " + val.to_string();
    };

    if (which == 1 || which == 2) {
        ClauseResult ci{"(i)", paravector ? "entries lie in PT(L,q) or are 0"
                                          : "entries lie in T(N,q) or are 0"};
        const char* names[4] = {"alpha", "beta", "gamma", "delta"};
        const CliffordElement* ent[4] = {&a, &b, &c, &d};
        for (int k = 0; k < 4; ++k)
            if (!ent[k]->is_zero() && !entry_ok(*ent[k]))
                clause_fail(ci, wit(names[k], *ent[k]));

        ClauseResult cii{"(ii)", "pseudo-determinant is a scalar unit"};
        CliffordElement pd = pseudo_det(g);
        if (!scalar_unit(pd))
            clause_fail(cii, wit("alpha*delta^t - beta*gamma^t", pd));

        ClauseResult ciii{"(iii)", which == 1
                                       ? "alpha*beta^t and delta*gamma^t lie in the module"
                                       : "conj(alpha)*beta and conj(delta)*gamma lie in the module"};
        if (which == 1) {
            CliffordElement ab = a * b.transpose();
            if (!in_module(ab))
                clause_fail(ciii, wit("alpha*beta^t", ab));
            CliffordElement dc = d * c.transpose();
            if (!in_module(dc))
                clause_fail(ciii, wit("delta*gamma^t", dc));
        } else {
            CliffordElement ab = a.conjugate() * b;
            if (!in_module(ab))
                clause_fail(ciii, wit("conj(alpha)*beta", ab));
            CliffordElement dc = d.conjugate() * c;
            if (!in_module(dc))
                clause_fail(ciii, wit("conj(delta)*gamma", dc));
        }

        rep.clauses = {ci, cii, ciii};
    } else if (which == 3) {
        ClauseResult ci{"(i)", "pseudo-determinant is a scalar unit"};
        CliffordElement pd = pseudo_det(g);
        if (!scalar_unit(pd))
            clause_fail(ci, wit("alpha*delta^t - beta*gamma^t", pd));

        ClauseResult cii{"(ii)", "alpha*beta^t and gamma*delta^t are symmetric"};
        if (a * b.transpose() != b * a.transpose())
            clause_fail(cii, wit("alpha*beta^t - beta*alpha^t",
                                 a * b.transpose() - b * a.transpose()));
        if (c * d.transpose() != d * c.transpose())
            clause_fail(cii, wit("gamma*delta^t - delta*gamma^t",
                                 c * d.transpose() - d * c.transpose()));

        ClauseResult ciii{"(iii)", "entry norms are scalars"};
        const char* names[4] = {"alpha", "beta", "gamma", "delta"};
        const CliffordElement* ent[4] = {&a, &b, &c, &d};
        for (int k = 0; k < 4; ++k) {
            CliffordElement n = ent[k]->norm();
            if (!n.is_scalar())
                clause_fail(ciii, wit(std::string(names[k]) + "*conj(" + names[k] + ")", n));
        }

        ClauseResult civ{"(iv)", "alpha*conj(gamma) and beta*conj(delta) lie in the module"};
        CliffordElement ag = a * c.conjugate();
        if (!in_module(ag))
            clause_fail(civ, wit("alpha*conj(gamma)", ag));
        CliffordElement bd = b * d.conjugate();
        if (!in_module(bd))
            clause_fail(civ, wit("beta*conj(delta)", bd));

        ClauseResult cv{"(v)", "alpha*x*conj(beta) + beta*conj(x)*conj(alpha) is a scalar "
                               "for basis x (and likewise gamma, delta)"};
        ClauseResult cvi{"(vi)", "alpha*x*conj(delta) + beta*conj(x)*conj(gamma) lies in the "
                                 "module for basis x"};
        for (const auto& [xname, x] : module_basis(S, paravector)) {
            CliffordElement xb = x.conjugate();
            CliffordElement top = a * x * b.conjugate() + b * xb * a.conjugate();
            if (!top.is_scalar())
                clause_fail(cv, wit("alpha*" + xname + "*conj(beta) + beta*conj(" + xname +
                                        ")*conj(alpha)",
                                    top));
            CliffordElement bot = c * x * d.conjugate() + d * xb * c.conjugate();
            if (!bot.is_scalar())
                clause_fail(cv, wit("gamma*" + xname + "*conj(delta) + delta*conj(" + xname +
                                        ")*conj(gamma)",
                                    bot));
            CliffordElement mid = a * x * d.conjugate() + b * xb * c.conjugate();
            if (!in_module(mid))
                clause_fail(cvi, wit("alpha*" + xname + "*conj(delta) + beta*conj(" + xname +
                                         ")*conj(gamma)",
                                     mid));
        }

        rep.clauses = {ci, cii, ciii, civ, cv, cvi};
    } else {
        throw MismatchError("definition must be 1, 2 or 3");
    }

    rep.member = true;
    for (const auto& cl : rep.clauses)
        rep.member = rep.member && cl.pass;
    return rep;
}

} // namespace detail

// Definition `which` of the Vahlen group GV(N, q) for a matrix over
// Cl(N, q).  All three agree over finite integral domains once T(N, q) is
// transpose-closed; over other rings they are checked independently.
inline ConditionReport check_definition(const CliffordMatrix2& g, int which) {
    std::uint32_t full = g.space()->full_mask();
    return detail::check_definition_impl(
        g, which, /*paravector=*/false,
        [full](const CliffordElement& x) { return x.is_vector(full); },
        [](const CliffordElement& x) { return is_in_T(x); });
}

// Deterministic enumeration of MAT(2, Cl(N, q)) over a finite ring:
// alpha is the most significant digit, then beta, gamma, delta.
class MatrixEnumeration {
  public:
    explicit MatrixEnumeration(const SpacePtr& space, GradeFilter alpha_delta = GradeFilter::All,
                               GradeFilter beta_gamma = GradeFilter::All)
        : diag_(space, alpha_delta), off_(space, beta_gamma) {
        std::uint64_t d = diag_.size(), o = off_.size();
        total_ = d * o;
        if (o != 0 && total_ / o != d)
            throw UnsupportedError("enumeration too large");
        std::uint64_t t2 = total_ * total_;
        if (total_ != 0 && t2 / total_ != total_)
            throw UnsupportedError("enumeration too large");
        total_ = t2;
    }

    std::uint64_t size() const { return total_; }

    CliffordMatrix2 at(std::uint64_t idx) const {
        std::uint64_t d = diag_.size(), o = off_.size();
        std::uint64_t dd = idx % d;
        idx /= d;
        std::uint64_t cc = idx % o;
        idx /= o;
        std::uint64_t bb = idx % o;
        idx /= o;
        return {diag_.at(idx), off_.at(bb), off_.at(cc), diag_.at(dd)};
    }

  private:
    CliffordEnumeration diag_, off_;
    std::uint64_t total_ = 0;
};

inline std::string matrix_key(const CliffordMatrix2& g) {
    return element_key(g.alpha()) + ";" + element_key(g.beta()) + ";" + element_key(g.gamma()) +
           ";" + element_key(g.delta());
}

} // namespace vahlen
