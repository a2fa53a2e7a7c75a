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

#include "rackrs/rack_code.hpp"

#include "rackrs/error.hpp"

namespace rackrs {

struct RackCode::Impl {
    FieldTower field;
    GoodPolynomial gp;
    CodeParams params;
    std::vector<Elem> constants;
    std::size_t s;
};

RackCode RackCode::build(FieldTower field, GoodPolynomial gp, std::size_t k) {
    validate(field, gp);
    std::vector<Elem> points;
    std::vector<Elem> constants;
    for (const auto& g : gp.groups) {
        points.insert(points.end(), g.points.begin(), g.points.end());
        constants.push_back(g.constant);
    }
    CodeParams params = make_code_params(field, k, std::move(points));
    const std::size_t u = gp.u();
    const std::size_t s = (k + u - 1) / u;
    return RackCode(std::make_shared<const Impl>(
        Impl{std::move(field), std::move(gp), std::move(params), std::move(constants), s}));
}

const FieldTower& RackCode::field() const noexcept { return impl_->field; }
const GoodPolynomial& RackCode::good_poly() const noexcept { return impl_->gp; }
const CodeParams& RackCode::params() const noexcept { return impl_->params; }
std::size_t RackCode::nbar() const noexcept { return impl_->gp.nbar(); }
std::size_t RackCode::u() const noexcept { return impl_->gp.u(); }
std::size_t RackCode::s() const noexcept { return impl_->s; }
const std::vector<Elem>& RackCode::constants() const noexcept { return impl_->constants; }

const std::vector<Elem>& RackCode::rack_points(std::size_t rack) const { return impl_->gp.groups.at(rack).points; }

Elem RackCode::point(std::size_t rack, std::size_t node) const { return rack_points(rack).at(node); }

RackArray layout(const RackCode& code, const Poly& f) {
    if (!degree_below(f, code.k()))
        throw Error(ErrorCode::PreconditionFailed, "message polynomial degree must be below k");
    RackArray arr{code, {}, {}};
    for (std::size_t i = 0; i < code.nbar(); ++i) {
        const auto& pts = code.rack_points(i);
        std::vector<Elem> row;
        row.reserve(pts.size());
        for (Elem a : pts) row.push_back(eval(code.field(), f, a));
        arr.points.push_back(pts);
        arr.symbols.push_back(std::move(row));
    }
    return arr;
}

ResidueSet rack_residues(const RackArray& arr) {
    const auto& code = arr.code;
    ResidueSet rs;
    rs.constants = code.constants();
    rs.s = code.s();
    for (std::size_t i = 0; i < code.nbar(); ++i) {
        Poly fi = lagrange(code.field(), arr.points[i], arr.symbols[i]);
        std::vector<Elem> row(code.u(), code.field().zero());
        for (std::size_t j = 0; j < code.u(); ++j) row[j] = fi.coeff(j);
        rs.residues.push_back(std::move(fi));
        rs.coeffs.push_back(std::move(row));
    }
    return rs;
}

ColumnWord column(const ResidueSet& rs, std::size_t j) {
    ColumnWord w;
    w.j = j;
    w.points = rs.constants;
    w.s = rs.s;
    for (const auto& row : rs.coeffs) w.symbols.push_back(row.at(j));
    return w;
}

bool is_column_codeword(const FieldTower& field, const ColumnWord& word) {
    return degree_below(lagrange(field, word.points, word.symbols), word.s);
}

Codeword flatten(const RackArray& arr) {
    Codeword out;
    for (const auto& row : arr.symbols) out.insert(out.end(), row.begin(), row.end());
    return out;
}

void write_array(std::ostream& out, const RackArray& arr) {
    for (std::size_t i = 0; i < arr.symbols.size(); ++i) {
        for (std::size_t j = 0; j < arr.symbols[i].size(); ++j) {
            if (j) out << ' ';
            out << arr.points[i][j].value << ':' << arr.symbols[i][j].value;
        }
        out << '\n';
    }
}

}  // namespace rackrs
