#pragma once

/**
 * @file carlitz.hpp
 * @brief Carlitz q-Euler numbers eps_n and q-Bernoulli numbers beta_n.
 *
 * Each sequence has two independent constructions: an explicit alternating
 * binomial sum and a triangular recursion. They share no code beyond the
 * field arithmetic, so agreement between them is a real check.
 */

#include "qhankel/ratfunc.hpp"

#include <string>
#include <vector>

namespace qhankel {

enum class SeqKind { qeuler, qbernoulli, theta, xi };

/// Identifies a moment sequence; `ell` is used by theta and xi only.
struct SeqId {
    SeqKind kind = SeqKind::qeuler;
    int ell = 0;

    std::string name() const;
    /// Accepts "qeuler", "qbernoulli", "theta", "xi".
    static SeqId parse(const std::string& name, int ell = 0);

    friend bool operator==(const SeqId&, const SeqId&) = default;
};

/// Values s_0..s_N of a named sequence. Values are appended in index order
/// and never change once present.
struct MomentSeq {
    SeqId id;
    std::vector<RatFuncQ> values;

    std::size_t size() const { return values.size(); }
    const RatFuncQ& operator[](std::size_t i) const { return values.at(i); }
};

RatFuncQ q_euler_explicit(int n);
RatFuncQ q_euler_recursive(int n);
RatFuncQ q_bernoulli_explicit(int n);
RatFuncQ q_bernoulli_recursive(int n);

/// eps_0..eps_upto by the recursion, computed once in index order.
std::vector<RatFuncQ> q_euler_sequence(int upto);
std::vector<RatFuncQ> q_bernoulli_sequence(int upto);

/// Value at q = 1 of eps_n or beta_n.
mpq_class limit_q1(SeqKind kind, int n);

}  // namespace qhankel
