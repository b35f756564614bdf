#include "kxy/stable.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kxy/groebner.hpp"
#include "kxy/jacobian.hpp"

namespace kxy {

DegreeTrace degree_trace(const Endo& phi, int kmax, const Budget& budget) {
    if (kmax < 1) throw PrecondError("degree_trace: kmax must be >= 1");
    DegreeTrace trace;
    Endo current = phi;
    for (int k = 1; k <= kmax; ++k) {
        trace.degrees.emplace_back(current.img_x.degree(), current.img_y.degree());
        if (k == kmax) break;
        try {
            current = compose(phi, current, budget);
        } catch (const BudgetError&) {
            trace.truncated = true;
            break;
        }
    }
    return trace;
}

namespace {

// Monomials of total degree <= d over {x,y} in ascending grlex order; this
// fixed indexing keeps the echelonized basis deterministic.
std::vector<Mono> monomials_up_to(int d) {
    std::vector<Mono> ms;
    for (int total = 0; total <= d; ++total)
        for (int j = total; j >= 0; --j) {
            Mono m;
            m.e[0] = static_cast<std::uint16_t>(total - j);
            m.e[1] = static_cast<std::uint16_t>(j);
            ms.push_back(m);
        }
    std::sort(ms.begin(), ms.end(), grlex_less);
    return ms;
}

}  // namespace

FixedSpace fixed_polys(const Endo& phi, int d, const Budget& budget) {
    if (d < 0) throw PrecondError("fixed_polys: degree bound must be >= 0");
    std::vector<Mono> cols = monomials_up_to(d);

    // phi(m) - m per column monomial; the fixed-point condition is linear
    // in the coefficients.
    std::vector<Poly> residuals;
    for (const Mono& m : cols) {
        Poly mono(Ring::xy());
        mono.add_term(m, Rat(1));
        residuals.push_back(apply(phi, mono, budget) - mono);
    }

    std::vector<Mono> row_monos;
    {
        std::set<Mono, GrlexGreater> seen;
        for (const Poly& r : residuals)
            for (const auto& [m, c] : r.terms()) seen.insert(m);
        row_monos.assign(seen.begin(), seen.end());
    }

    const std::size_t nrows = row_monos.size();
    const std::size_t ncols = cols.size();
    std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(ncols, Rat(0)));
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) a[r][c] = residuals[c].coeff(row_monos[r]);

    // Exact reduced row echelon form with deterministic pivoting: first
    // nonzero column, smallest row index.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t sel = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (a[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == nrows) continue;
        std::swap(a[rank], a[sel]);
        Rat inv = Rat(1) / a[rank][c];
        for (std::size_t cc = c; cc < ncols; ++cc) a[rank][cc] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat factor = a[r][c];
            for (std::size_t cc = c; cc < ncols; ++cc) a[r][cc] -= factor * a[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    // Nullspace basis: one vector per free column.
    FixedSpace space;
    space.degree_bound = d;
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Poly f(Ring::xy());
        f.add_term(cols[free_c], Rat(1));
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t pc = pivot_col[r];
            if (a[r][free_c] != 0) f.add_term(cols[pc], -a[r][free_c]);
        }
        if (!(apply(phi, f, budget) == f)) throw Error("fixed_polys: basis element not fixed");
        space.basis.push_back(std::move(f));
    }
    return space;
}

Cor17Report cor17_consistency(const Endo& phi, int d, const Budget& budget) {
    Cor17Report rep;
    rep.keller = is_keller(phi);
    if (!rep.keller) {
        rep.detail = "premise not met: Jacobian determinant is not a nonzero constant";
        return rep;
    }
    FixedSpace space = fixed_polys(phi, d, budget);
    for (const Poly& f : space.basis)
        if (!f.is_constant()) rep.has_fixed = true;
    if (!rep.has_fixed) {
        rep.detail = "premise not met: no non-constant fixed polynomial up to degree " +
                     std::to_string(d);
        return rep;
    }
    AutoCheck check = is_automorphism(phi, budget);
    if (check.is_auto) {
        rep.status = Cor17Report::Status::consistent;
        rep.detail = "Keller mapping with a fixed polynomial; automorphism confirmed";
    } else {
        rep.status = Cor17Report::Status::theorem_violation;
        rep.detail = "THEOREM VIOLATION: Keller mapping fixes a non-constant polynomial "
                     "but is not an automorphism (implementation bug)";
    }
    return rep;
}

}  // namespace kxy
