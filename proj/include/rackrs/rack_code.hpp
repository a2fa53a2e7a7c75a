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

#ifndef RACKRS_RACK_CODE_HPP
#define RACKRS_RACK_CODE_HPP

#include <cstddef>
#include <memory>
#include <ostream>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/good_poly.hpp"
#include "rackrs/poly.hpp"
#include "rackrs/rs_code.hpp"

namespace rackrs {

/// An RS(n, k) code whose evaluation set is the partition of a good polynomial,
/// laid out as nbar racks of u nodes each. Racks follow the partition order.
class RackCode {
   public:
    static RackCode build(FieldTower field, GoodPolynomial gp, std::size_t k);

    const FieldTower& field() const noexcept;
    const GoodPolynomial& good_poly() const noexcept;
    /// Points in rack-major order.
    const CodeParams& params() const noexcept;

    std::size_t nbar() const noexcept;
    std::size_t u() const noexcept;
    std::size_t n() const noexcept { return params().n; }
    std::size_t k() const noexcept { return params().k; }
    /// ceil(k / u): the dimension of every column code.
    std::size_t s() const noexcept;

    Elem point(std::size_t rack, std::size_t node) const;
    const std::vector<Elem>& rack_points(std::size_t rack) const;
    /// The constants y_i of h on each rack.
    const std::vector<Elem>& constants() const noexcept;

   private:
    struct Impl;
    explicit RackCode(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

using SymbolMatrix = std::vector<std::vector<Elem>>;

struct RackArray {
    RackCode code;
    SymbolMatrix points;
    SymbolMatrix symbols;
};

struct ResidueSet {
    std::vector<Poly> residues;
    /// coeffs[i][j] = e_{i,j}, the x^j coefficient of residue i.
    SymbolMatrix coeffs;
    std::vector<Elem> constants;
    std::size_t s = 0;
};

struct ColumnWord {
    std::size_t j = 0;
    std::vector<Elem> symbols;
    std::vector<Elem> points;
    std::size_t s = 0;
};

RackArray layout(const RackCode& code, const Poly& f);

/// Per-rack Lagrange interpolation of the array rows.
ResidueSet rack_residues(const RackArray& arr);

ColumnWord column(const ResidueSet& rs, std::size_t j);

/// True when the word interpolates to degree < s at its points.
bool is_column_codeword(const FieldTower& field, const ColumnWord& word);

/// Symbols in rack-major order, aligned with RackCode::params().points.
Codeword flatten(const RackArray& arr);

/// nbar lines of u `point:symbol` pairs.
void write_array(std::ostream& out, const RackArray& arr);

}  // namespace rackrs

#endif  // RACKRS_RACK_CODE_HPP
