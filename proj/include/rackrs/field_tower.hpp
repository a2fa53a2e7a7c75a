/*
   Copyright 2026 The rackrs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RACKRS_FIELD_TOWER_HPP
#define RACKRS_FIELD_TOWER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rackrs {

/// An element of GF(p^t) packed as an integer: base-p digits of the
/// polynomial-basis coordinates, lowest-degree coefficient least significant.
struct Elem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class MulStrategy {
    Auto,        ///< log/antilog tables up to 2^16 elements, schoolbook above
    Tables,
    Schoolbook,
};

/// GF(p^t) with its chain of subfields GF(p^delta), delta | t.
///
/// One representation is used for every level: a subfield element is simply
/// an element x with x^(p^delta) = x. Each level has a distinguished
/// generator of order p^delta - 1, obtained as a power of the top-level
/// generator. Immutable; copies share state.
class FieldTower {
   public:
    /// Builds GF(p^t) = GF(p)[x] / modulus. `modulus` is low-to-high and monic.
    static FieldTower build(std::uint32_t p, unsigned t, std::vector<std::uint32_t> modulus,
                            MulStrategy strategy = MulStrategy::Auto);

    /// Uses the shipped primitive modulus for (p, t), p in {2, 3, 5}, p^t <= 2^20.
    static FieldTower standard(std::uint32_t p, unsigned t, MulStrategy strategy = MulStrategy::Auto);

    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint32_t size() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;
    bool uses_tables() const noexcept;

    /// Divisors of t in ascending order; each is a level of the tower.
    std::vector<unsigned> subfield_degrees() const;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    Elem generator() const noexcept;
    Elem subfield_generator(unsigned delta) const;

    /// Range-checked construction from a packed value (LEVEL_MISMATCH otherwise).
    Elem element(std::uint32_t packed) const;
    Elem from_prime(std::uint32_t c) const;
    bool contains(Elem x) const noexcept { return x.value < size(); }

    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem div(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete logarithm to the generator; available when tables are built.
    std::optional<std::uint32_t> log(Elem x) const;
    Elem exp(std::uint64_t k) const;

    /// Deterministic ordering key: zero first, then by generator power
    /// (packed value when no log table exists).
    std::uint64_t order_key(Elem x) const;

    /// x^(p^k)
    Elem frobenius(Elem x, unsigned k) const;
    bool in_subfield(Elem x, unsigned delta) const;

    /// Tr_{GF(p^t)/GF(p^delta)}(x) = sum_{i < t/delta} x^(p^(delta*i)).
    Elem trace(Elem x, unsigned delta = 1) const;

    std::vector<Elem> subfield_elements(unsigned delta) const;

    std::string format_packed(Elem x) const;
    /// "0", "1", "γ", "γ^5"; falls back to the packed value without a log table.
    std::string format_power(Elem x) const;

   private:
    struct Impl;
    explicit FieldTower(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void require_subfield(unsigned delta) const;

    std::shared_ptr<const Impl> impl_;
};

/// One row of the shipped primitive-modulus table.
struct ModulusEntry {
    std::uint32_t p;
    unsigned t;
    std::vector<std::uint32_t> modulus;
};
const std::vector<ModulusEntry>& modulus_table();

// ---------------------------------------------------------------------------
// Linear algebra over the field and its subfields.

using Matrix = std::vector<std::vector<Elem>>;

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> invert(const FieldTower& field, Matrix m);

/// Solves a * x = rhs for square a; nullopt when singular.
std::optional<std::vector<Elem>> solve(const FieldTower& field, Matrix a, std::vector<Elem> rhs);

/// Dual basis {b_j'} with Tr_{top/delta}(b_i b_j') = [i == j]. The input must be
/// t/delta elements independent over GF(p^delta).
std::vector<Elem> dual_basis(const FieldTower& field, std::span<const Elem> basis, unsigned delta = 1);

/// Coordinates Tr(b_i x) of x; reassemble() with the dual basis inverts it.
std::vector<Elem> expand(const FieldTower& field, Elem x, std::span<const Elem> basis, unsigned delta = 1);
Elem reassemble(const FieldTower& field, std::span<const Elem> coords, std::span<const Elem> dual);

/// Dimension of the GF(p^delta)-span of `elems`.
std::size_t rank_over_subfield(const FieldTower& field, std::span<const Elem> elems, unsigned delta);

/// Greedy maximal independent subset of `elems` (input order preserved).
std::vector<Elem> span_basis(const FieldTower& field, std::span<const Elem> elems, unsigned delta);

/// A GF(p^delta)-subspace of GF(p^t) given by an independent basis.
struct SubspaceDesc {
    unsigned subfield_degree = 1;
    std::vector<Elem> basis;
    std::uint64_t cardinality = 1;
};

SubspaceDesc make_subspace(const FieldTower& field, std::vector<Elem> basis, unsigned delta = 1);
std::vector<Elem> enumerate(const FieldTower& field, const SubspaceDesc& subspace);

/// L_U(x) = prod_{u in U} (x - u).
Elem linearized_eval(const FieldTower& field, const SubspaceDesc& subspace, Elem x);

}  // namespace rackrs

#endif  // RACKRS_FIELD_TOWER_HPP
