#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kxy/budget.hpp"
#include "kxy/endo.hpp"
#include "kxy/poly.hpp"
#include "kxy/unipoly.hpp"

namespace kxy {

// Membership of f in the one-generated subalgebra K[p]: h with h(p) = f.
// Leading-term subduction under grlex is a decision procedure, so nullopt
// is definitive.
std::optional<UniPoly> subduce(const Poly& f, const Poly& p);

// One round of the degree-reduction loop: first <- first - c * second^k
// (or the symmetric move when reduce_first is false).
struct AmStep {
    bool reduce_first = true;
    Rat c;
    int k = 0;
};

struct AmResult {
    bool ok = false;
    std::string error;         // set when !ok
    Poly h;                    // the surviving nonzero polynomial
    bool h_is_first = true;    // which slot survived
    std::vector<AmStep> steps;
};

// Euclidean-style reduction of a generating pair down to a single
// generator; fails when a round has no degree divisibility or no scalar
// cancels the leading terms.
AmResult am_reduce(const Poly& f, const Poly& g, const Budget& budget = {});

struct RetractionCert {
    Endo retraction;
    Poly generator;
    UniPoly witness_x;  // retraction(x) = witness_x(generator)
    UniPoly witness_y;  // retraction(y) = witness_y(generator)
    std::optional<TameWord> normalizer;
    std::optional<Poly> normal_form_q;
};

struct RetractionCheck {
    enum class Status {
        proper,           // certificate filled in
        identity_image,   // image is all of K[x,y]
        constants_image,  // image is K
        not_idempotent,
        generator_not_found,
    };

    Status status = Status::generator_not_found;
    std::string detail;
    std::optional<RetractionCert> cert;

    bool proper() const { return status == Status::proper; }
};

// Checks idempotency, extracts a generator of the image via am_reduce, and
// confirms the retraction fixes it.
RetractionCheck verify_retraction(const Endo& phi, const Budget& budget = {});

struct NormalizeResult {
    bool ok = false;
    std::string error;
    TameWord psi;   // automorphism with psi(generator) = x + y*q
    Poly q;
    Poly p_normal;  // x + y*q
    Poly generator;
};

// Constructive normal form: a tame word taking the retract generator to
// x + y*q, assembled by replaying the reduction steps as coordinate changes
// and validated by direct application.
NormalizeResult normalize_retract(const Endo& phi, const Budget& budget = {});

struct Cor12Result {
    bool ok = false;
    std::string error;
    std::optional<RetractionCert> cert;
};

// Given a mapping with phi(p) = x, builds psi = (x -> p, y -> 0) and
// certifies rho = psi after phi as a retraction onto K[p].
Cor12Result cor12_retraction(const Poly& p, const Endo& phi, const Budget& budget = {});

struct Cor31Result {
    enum class Status {
        retract,              // certificate filled in
        no_homogeneous_divisor,
        extension_required,   // no rational root; needs a field extension
    };

    Status status = Status::no_homogeneous_divisor;
    std::string detail;
    Poly divisor;             // homogeneous gcd h of p - x
    std::optional<Rat> c;     // retraction is (x -> p, y -> c*p)
    std::optional<RetractionCert> cert;
};

// Requires p = x + g with zero constant term and x-coefficient 1; builds a
// retraction from a homogeneous divisor of g when one exists over Q.
Cor31Result cor31_retraction(const Poly& p, const Budget& budget = {});

struct Cor14Report {
    bool divisible_by_x = false;
    bool y_axis_edge = false;
    bool consistent_with_jacobian_mate = false;
};

Cor14Report cor14_lemmas(const Poly& p);

}  // namespace kxy
