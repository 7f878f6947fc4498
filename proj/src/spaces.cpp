#include "fsem/spaces.hpp"

#include "fsem/sup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fsem {

namespace {

std::string q_to_string(const mpq_class& q)
{
    return Real(q).to_string();
}

double q_abs_pow(const mpq_class& q, double rho)
{
    if (q == 0) {
        return 0;
    }
    return std::pow(std::fabs(q.get_d()), rho);
}

mpq_class q_abs(const mpq_class& q)
{
    return q < 0 ? mpq_class(-q) : q;
}

template <class F>
SeqElement zip(const SeqElement& x, const SeqElement& y, F op)
{
    const std::size_t L = std::max(x.length(), y.length());
    std::vector<mpq_class> p(L);
    for (std::size_t k = 1; k <= L; ++k) {
        p[k - 1] = op(x.at(k), y.at(k));
    }
    return SeqElement(std::move(p), op(x.tail(), y.tail()));
}

template <class F>
SeqElement map_entries(const SeqElement& x, F op)
{
    std::vector<mpq_class> p;
    p.reserve(x.length());
    for (const auto& t : x.prefix()) {
        p.push_back(op(t));
    }
    return SeqElement(std::move(p), op(x.tail()));
}

void require_zero_tail(const SeqElement& x, const char* where)
{
    if (x.tail() != 0) {
        throw std::invalid_argument(std::string(where) + ": sigma_rho elements must have zero tail");
    }
}

}  // namespace

SeqElement::SeqElement(std::vector<mpq_class> prefix, mpq_class tail) : prefix_(std::move(prefix)), tail_(std::move(tail))
{
    for (auto& t : prefix_) {
        t.canonicalize();
    }
    tail_.canonicalize();
    canonicalize();
}

SeqElement SeqElement::from_ints(const std::vector<long>& prefix, long tail)
{
    std::vector<mpq_class> p;
    p.reserve(prefix.size());
    for (long v : prefix) {
        p.emplace_back(v);
    }
    return SeqElement(std::move(p), mpq_class(tail));
}

const mpq_class& SeqElement::at(std::size_t k) const
{
    if (k == 0) {
        throw std::invalid_argument("SeqElement::at: indices start at 1");
    }
    return k <= prefix_.size() ? prefix_[k - 1] : tail_;
}

void SeqElement::canonicalize()
{
    while (!prefix_.empty() && prefix_.back() == tail_) {
        prefix_.pop_back();
    }
}

std::string SeqElement::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        os << (i ? ", " : "") << q_to_string(prefix_[i]);
    }
    os << (prefix_.empty() ? "" : ", ") << "tail " << q_to_string(tail_) << ")";
    return os.str();
}

SeqElement seq_add(const SeqElement& x, const SeqElement& y)
{
    return zip(x, y, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); });
}

SeqElement seq_sub(const SeqElement& x, const SeqElement& y)
{
    return zip(x, y, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a - b); });
}

SeqElement seq_scale(const SeqElement& x, const mpq_class& a)
{
    return map_entries(x, [&](const mpq_class& t) { return mpq_class(a * t); });
}

SeqElement seq_mul(const SeqElement& x, const SeqElement& y)
{
    return zip(x, y, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); });
}

SeqElement seq_pow(const SeqElement& x, unsigned m)
{
    return map_entries(x, [&](const mpq_class& t) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), t.get_num_mpz_t(), m);
        mpz_pow_ui(r.get_den_mpz_t(), t.get_den_mpz_t(), m);
        return r;
    });
}

SeqElement seq_truncate(const SeqElement& x, std::size_t M)
{
    std::vector<mpq_class> p;
    for (std::size_t k = 1; k <= M; ++k) {
        p.push_back(x.at(k));
    }
    return SeqElement(std::move(p), 0);
}

Space Space::schwartz(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("Space::schwartz: dimension must be at least 1");
    }
    Space X;
    X.kind_ = SpaceKind::schwartz;
    X.n_ = n;
    return X;
}

Space Space::sigma_rho(double rho)
{
    if (!(rho > 0 && rho < 1)) {
        throw std::invalid_argument("Space::sigma_rho: rho must satisfy 0 < rho < 1");
    }
    Space X;
    X.kind_ = SpaceKind::sigma_rho;
    X.rho_ = rho;
    return X;
}

Space Space::s()
{
    return Space{};
}

std::string Space::tag() const
{
    switch (kind_) {
    case SpaceKind::schwartz:
        return "schwartz(n=" + std::to_string(n_) + ")";
    case SpaceKind::sigma_rho: {
        std::ostringstream os;
        os << "sigma_rho(rho=" << rho_ << ")";
        return os.str();
    }
    case SpaceKind::s:
        return "s";
    }
    return "?";
}

Element zero_element(const Space& X)
{
    if (X.kind() == SpaceKind::schwartz) {
        return GaussPolyFn(X.dim());
    }
    return SeqElement();
}

bool is_member(const Space& X, const Element& x)
{
    if (X.kind() == SpaceKind::schwartz) {
        const auto* f = std::get_if<GaussPolyFn>(&x);
        return f != nullptr && f->dim() == X.dim();
    }
    const auto* s = std::get_if<SeqElement>(&x);
    if (s == nullptr) {
        return false;
    }
    return X.kind() == SpaceKind::s || s->tail() == 0;
}

void require_member(const Space& X, const Element& x, const char* what)
{
    if (!is_member(X, x)) {
        throw std::invalid_argument(std::string(what) + " is not an element of " + X.tag());
    }
}

namespace {

template <class FG, class FS>
Element binary(const Element& x, const Element& y, FG fg, FS fs, const char* where)
{
    if (x.index() != y.index()) {
        throw std::invalid_argument(std::string(where) + ": elements from different spaces");
    }
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return fg(*f, std::get<GaussPolyFn>(y));
    }
    return fs(std::get<SeqElement>(x), std::get<SeqElement>(y));
}

}  // namespace

Element el_add(const Element& x, const Element& y)
{
    return binary(x, y, gp_add, seq_add, "el_add");
}

Element el_sub(const Element& x, const Element& y)
{
    return binary(x, y, gp_sub, seq_sub, "el_sub");
}

Element el_neg(const Element& x)
{
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return gp_neg(*f);
    }
    return seq_scale(std::get<SeqElement>(x), -1);
}

Element el_scale(const Element& x, const Real& a)
{
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return gp_scale(*f, Complex(a));
    }
    return seq_scale(std::get<SeqElement>(x), to_exact(a));
}

bool el_is_zero(const Element& x)
{
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return f->is_zero();
    }
    return std::get<SeqElement>(x).is_zero();
}

bool el_equal(const Element& x, const Element& y)
{
    if (x.index() != y.index()) {
        return false;
    }
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return *f == std::get<GaussPolyFn>(y);
    }
    return std::get<SeqElement>(x) == std::get<SeqElement>(y);
}

std::string el_to_string(const Element& x)
{
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return f->to_string();
    }
    return std::get<SeqElement>(x).to_string();
}

bool canonical_less(const SeminormId& a, const SeminormId& b)
{
    if (a.is_schwartz() != b.is_schwartz()) {
        return a.is_schwartz();
    }
    if (!a.is_schwartz()) {
        return a.k < b.k;
    }
    const unsigned oa = a.alpha.order() + a.beta.order();
    const unsigned ob = b.alpha.order() + b.beta.order();
    if (oa != ob) {
        return oa < ob;
    }
    if (a.alpha != b.alpha) {
        return a.alpha < b.alpha;
    }
    return a.beta < b.beta;
}

bool operator<(const SeminormId& a, const SeminormId& b)
{
    return canonical_less(a, b);
}

std::string SeminormId::to_string() const
{
    if (is_schwartz()) {
        return "(" + alpha.to_string() + "," + beta.to_string() + ")";
    }
    return std::to_string(k);
}

double schwartz_seminorm(const GaussPolyFn& f, const MultiIndex& alpha, const MultiIndex& beta)
{
    if (alpha.dim() != f.dim() || beta.dim() != f.dim()) {
        throw std::invalid_argument("schwartz_seminorm: multi-index dimension does not match the function");
    }
    return gp_sup_abs(gp_monomial_mul(gp_diff(f, beta), alpha));
}

double sigma_seminorm(const SeqElement& x, unsigned k, double rho)
{
    require_zero_tail(x, "sigma_seminorm");
    return q_abs_pow(x.at(k), rho);
}

double sigma_metric(const SeqElement& x, const SeqElement& y, double rho)
{
    require_zero_tail(x, "sigma_metric");
    require_zero_tail(y, "sigma_metric");
    const SeqElement d = seq_sub(x, y);
    double s = 0;
    for (const auto& t : d.prefix()) {
        s += q_abs_pow(t, rho);
    }
    return s;
}

mpq_class p_sup(const SeqElement& x)
{
    mpq_class m = q_abs(x.tail());
    for (const auto& t : x.prefix()) {
        m = std::max(m, q_abs(t));
    }
    return m;
}

mpq_class p_sup_prefix(const SeqElement& x, std::size_t M)
{
    mpq_class m = 0;
    for (std::size_t k = 1; k <= M; ++k) {
        m = std::max(m, q_abs(x.at(k)));
    }
    return m;
}

mpq_class s_seminorm_exact(const SeqElement& x, unsigned k)
{
    const mpq_class a = q_abs(x.at(k));
    return a / (1 + a);
}

double s_seminorm(const SeqElement& x, unsigned k)
{
    return s_seminorm_exact(x, k).get_d();
}

mpq_class s_metric_exact(const SeqElement& x, const SeqElement& y)
{
    const SeqElement d = seq_sub(x, y);
    mpq_class sum = 0;
    mpq_class w = 1;
    for (std::size_t k = 1; k <= d.length(); ++k) {
        w /= 2;
        const mpq_class a = q_abs(d.at(k));
        sum += w * a / (1 + a);
    }
    // sum_{n > L} 2^{-n} c = 2^{-L} c
    const mpq_class a = q_abs(d.tail());
    sum += w * a / (1 + a);
    return sum;
}

double s_metric(const SeqElement& x, const SeqElement& y)
{
    return s_metric_exact(x, y).get_d();
}

double s_fnorm(const SeqElement& x)
{
    return s_metric(x, SeqElement());
}

double seminorm_eval(const Space& X, const SeminormId& id, const Element& x)
{
    require_member(X, x, "seminorm_eval argument");
    switch (X.kind()) {
    case SpaceKind::schwartz:
        if (!id.is_schwartz()) {
            throw std::invalid_argument("seminorm_eval: Schwartz space needs an (alpha, beta) index");
        }
        return schwartz_seminorm(std::get<GaussPolyFn>(x), id.alpha, id.beta);
    case SpaceKind::sigma_rho:
        if (id.is_schwartz()) {
            throw std::invalid_argument("seminorm_eval: sequence spaces need an index k >= 1");
        }
        return sigma_seminorm(std::get<SeqElement>(x), id.k, X.rho());
    case SpaceKind::s:
        if (id.is_schwartz()) {
            throw std::invalid_argument("seminorm_eval: sequence spaces need an index k >= 1");
        }
        return s_seminorm(std::get<SeqElement>(x), id.k);
    }
    return 0;
}

std::vector<SeminormId> enumerate_seminorms(const Space& X, std::size_t count)
{
    std::vector<SeminormId> out;
    if (X.is_sequence()) {
        for (std::size_t k = 1; k <= count; ++k) {
            out.push_back(SeminormId::seq(static_cast<unsigned>(k)));
        }
        return out;
    }
    const std::size_t n = X.dim();
    for (unsigned d = 0; out.size() < count; ++d) {
        std::vector<SeminormId> level;
        for (const auto& a : mi_all_up_to(n, d)) {
            for (const auto& b : mi_all_up_to(n, d - a.order())) {
                if (a.order() + b.order() == d) {
                    level.push_back(SeminormId::schwartz(a, b));
                }
            }
        }
        std::sort(level.begin(), level.end());
        for (auto& id : level) {
            if (out.size() == count) {
                break;
            }
            out.push_back(std::move(id));
        }
    }
    return out;
}

std::size_t seminorm_position(const Space& X, const SeminormId& id)
{
    if (X.is_sequence()) {
        if (id.is_schwartz()) {
            throw std::invalid_argument("seminorm_position: sequence spaces need an index k >= 1");
        }
        return id.k;
    }
    if (!id.is_schwartz() || id.alpha.dim() != X.dim() || id.beta.dim() != X.dim()) {
        throw std::invalid_argument("seminorm_position: index does not belong to " + X.tag());
    }
    // Every index of order below |alpha| + |beta| + 1 comes first.
    const unsigned d = id.alpha.order() + id.beta.order();
    std::size_t bound = 1;
    while (true) {
        auto ids = enumerate_seminorms(X, bound);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] == id) {
                return i + 1;
            }
        }
        if (ids.back().alpha.order() + ids.back().beta.order() > d) {
            throw std::logic_error("seminorm_position: index not found");
        }
        bound *= 2;
    }
}

InclusionReport sigma_inclusion_check(const SeqElement& x, double rho, double gamma)
{
    if (!(0 < rho && rho < gamma && gamma < 1)) {
        throw std::invalid_argument("sigma_inclusion_check: requires 0 < rho < gamma < 1");
    }
    InclusionReport r;
    r.member_small = x.tail() == 0;
    r.member_large = x.tail() == 0;
    for (const auto& t : x.prefix()) {
        const double a = q_abs_pow(t, rho);
        const double b = q_abs_pow(t, gamma);
        r.sum_rho += a;
        r.sum_gamma += b;
        if (b > a) {
            r.termwise_holds = false;
        }
    }
    r.passed = r.member_small && r.member_large;
    if (!r.member_small) {
        r.note = "nonzero tail: not finitely supported";
    } else if (!r.termwise_holds) {
        r.note = "termwise |t|^gamma <= |t|^rho reverses where |t| > 1; membership in both spaces still holds";
    } else {
        r.note = "termwise |t|^gamma <= |t|^rho holds at every entry";
    }
    return r;
}

ScalingReport scaling_property_check(const SeqElement& x, const mpq_class& a)
{
    ScalingReport r;
    const mpq_class abs_a = q_abs(a);
    const bool small = abs_a < 1;
    auto check = [&](const mpq_class& t, unsigned k) {
        const mpq_class at = q_abs(mpq_class(a * t));
        const mpq_class lhs = at / (1 + at);
        const mpq_class nt = q_abs(t);
        const mpq_class rhs = abs_a * nt / (1 + nt);
        const bool ok = small ? lhs >= rhs : lhs <= rhs;
        ++r.indices;
        if (!ok && r.passed) {
            r.passed = false;
            r.first_failure = k;
        }
    };
    for (std::size_t k = 1; k <= x.length(); ++k) {
        check(x.at(k), static_cast<unsigned>(k));
    }
    check(x.tail(), static_cast<unsigned>(x.length() + 1));
    r.note = small ? "|a| < 1: ||ax||_k >= |a| ||x||_k" : "|a| >= 1: ||ax||_k <= |a| ||x||_k";
    return r;
}

}  // namespace fsem
