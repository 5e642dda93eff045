#include "galcov/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace galcov {

namespace {

std::string vec_str(const ModVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

ModVector Epimorphism::column(std::size_t j) const {
    ModVector c;
    for (const auto& r : rows) c.push_back(r.at(j));
    return c;
}

ModVector Epimorphism::apply(const std::vector<int>& combination) const {
    if (combination.size() != rows.size()) throw std::invalid_argument("meridian combination has wrong length");
    ModVector out(k, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) out[j] = mod(out[j] + std::int64_t(combination[i]) * rows[i][j], m);
    return out;
}

EpimorphismReport validate_epimorphism(const Epimorphism& phi) {
    EpimorphismReport rep;
    if (phi.m < 1) {
        rep.problems.push_back("modulus must be positive");
        return rep;
    }
    if (phi.m > 1 && !is_prime(phi.m))
        rep.problems.push_back("modulus " + std::to_string(phi.m) + " is not prime (unsupported)");
    if (phi.rows.size() < 2) rep.problems.push_back("need at least 2 meridians");
    for (std::size_t i = 0; i < phi.rows.size(); ++i) {
        if (phi.rows[i].size() != phi.k) {
            rep.problems.push_back("row " + std::to_string(i + 1) + " has length " +
                                   std::to_string(phi.rows[i].size()) + ", expected " + std::to_string(phi.k));
            return rep;
        }
        for (int v : phi.rows[i])
            if (v < 0 || v >= phi.m) {
                rep.problems.push_back("row " + std::to_string(i + 1) + " entry " + std::to_string(v) +
                                       " outside 0.." + std::to_string(phi.m - 1));
                return rep;
            }
    }
    ModVector sum(phi.k, 0);
    for (const auto& r : phi.rows)
        for (std::size_t j = 0; j < phi.k; ++j) sum[j] = mod(sum[j] + r[j], phi.m);
    rep.zero_sum = true;
    for (int v : sum) rep.zero_sum = rep.zero_sum && v == 0;
    if (!rep.zero_sum) rep.problems.push_back("rows sum to " + vec_str(sum) + ", not 0");

    if (phi.m == 1) {
        rep.surjective = true;
    } else if (is_prime(phi.m)) {
        rep.surjective = rank_mod_p(phi.rows, phi.m) == phi.k;
        if (!rep.surjective) rep.problems.push_back("rows do not generate (Z/" + std::to_string(phi.m) + ")^" +
                                                    std::to_string(phi.k));
    }
    return rep;
}

void require_valid(const Epimorphism& phi) {
    auto rep = validate_epimorphism(phi);
    if (rep.valid()) return;
    std::string msg = "invalid epimorphism:";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
}

std::vector<int> eps_class(const IncidencePoint& point, std::size_t n) {
    if (point.multiplicity() < 2) throw std::invalid_argument("eps class needs a point of multiplicity >= 2");
    std::vector<int> v(n, 0);
    for (auto i : point.incident) v.at(i) = 1;
    return v;
}

bool independence(const std::vector<ModVector>& vecs, std::size_t r, int m) {
    if (!is_prime(m)) throw std::invalid_argument("independence test needs a prime modulus, got " + std::to_string(m));
    return rank_mod_p(vecs, m) == r;
}

std::vector<std::size_t> default_blowup(const Arrangement& arr) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < arr.points().size(); ++p)
        if (arr.points()[p].multiplicity() >= 3) out.push_back(p);
    return out;
}

SmoothnessCertificate smoothness_check(const Arrangement& arr, const Epimorphism& phi,
                                       const std::vector<std::size_t>& blown) {
    require_valid(phi);
    if (phi.n() != arr.size()) throw std::invalid_argument("epimorphism has " + std::to_string(phi.n()) +
                                                            " rows for " + std::to_string(arr.size()) + " lines");
    SmoothnessCertificate cert;
    std::vector<bool> is_blown(arr.points().size(), false);
    for (auto p : blown) is_blown.at(p) = true;
    if (phi.m == 1) return cert;  // nothing is branched

    for (std::size_t p = 0; p < arr.points().size(); ++p) {
        const auto& pt = arr.points()[p];
        if (is_blown[p]) {
            ModVector eps = phi.apply(eps_class(pt, arr.size()));
            for (auto i : pt.incident) {
                SmoothnessCheck c{p, true, i, eps, phi.rows[i], independence({eps, phi.rows[i]}, 2, phi.m), ""};
                if (!c.independent)
                    cert.failures.push_back("point " + std::to_string(p) + ": phi(eps)=" + vec_str(eps) +
                                            " and phi(lambda_" + std::to_string(i + 1) + ")=" +
                                            vec_str(phi.rows[i]) + " are dependent");
                cert.checks.push_back(std::move(c));
            }
        } else if (pt.multiplicity() == 2) {
            auto i = pt.incident[0], j = pt.incident[1];
            SmoothnessCheck c{p, false, j, phi.rows[i], phi.rows[j],
                              independence({phi.rows[i], phi.rows[j]}, 2, phi.m), ""};
            if (!c.independent)
                cert.failures.push_back("double point " + std::to_string(p) + ": phi(lambda_" + std::to_string(i + 1) +
                                        ") and phi(lambda_" + std::to_string(j + 1) + ") are dependent");
            cert.checks.push_back(std::move(c));
        } else {
            SmoothnessCheck c{p, false, pt.incident[0], {}, {}, false,
                              "unblown point of multiplicity " + std::to_string(pt.multiplicity())};
            cert.failures.push_back("point " + std::to_string(p) + " has multiplicity " +
                                    std::to_string(pt.multiplicity()) + " but is not blown up");
            cert.checks.push_back(std::move(c));
        }
    }
    return cert;
}

std::size_t DeckGroup::order() const { return ipow(static_cast<std::size_t>(m), k); }

std::size_t DeckGroup::kernel_order() const { return ipow(static_cast<std::size_t>(m), kernel_basis.size()); }

ModVector DeckGroup::image(const ModVector& gamma) const {
    if (gamma.size() + 1 != n) throw std::invalid_argument("Fermat-group element must have n-1 coordinates");
    ModVector out(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) s += std::int64_t(congruences[j][i]) * gamma[i];
        out[j] = mod(s, m);
    }
    return out;
}

bool DeckGroup::in_kernel(const ModVector& gamma) const {
    for (int v : image(gamma))
        if (v != 0) return false;
    return true;
}

DeckGroup galois_kernel(const Epimorphism& phi) {
    require_valid(phi);
    DeckGroup g;
    g.m = phi.m;
    g.k = phi.k;
    g.n = phi.n();
    for (std::size_t j = 0; j < phi.k; ++j) {
        ModVector row;
        for (std::size_t i = 0; i + 1 < phi.n(); ++i) row.push_back(phi.rows[i][j]);
        g.congruences.push_back(std::move(row));
    }
    if (phi.m == 1) return g;
    g.kernel_basis = nullspace_mod_p(g.congruences, phi.n() - 1, phi.m);
    return g;
}

}  // namespace galcov
