#include "riglab/constructions.hpp"

#include <algorithm>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"
#include "riglab/parallel.hpp"

namespace riglab {

ZeroOutsideResult zero_outside(const SignMatrix& h, const std::vector<std::size_t>& row_set,
                               const std::vector<std::size_t>& col_set) {
    const std::size_t n = h.order();
    std::vector<bool> keep_row(n, false);
    std::vector<bool> keep_col(n, false);
    // submatrix() revalidates the sets; reuse its checks up front.
    submatrix(to_exact(h), row_set, col_set);
    for (auto r : row_set) keep_row[r] = true;
    for (auto c : col_set) keep_col[c] = true;

    ExactMatrix out(n, n);
    std::vector<Change> changes;
    changes.reserve(n * n - row_set.size() * col_set.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (keep_row[i] && keep_col[j]) {
                out.set(i, j, ExactScalar(h.at(i, j)));
            } else {
                changes.push_back({i, j, ExactScalar(0)});
            }
        }
    }
    return {std::move(out), Perturbation(n, std::move(changes))};
}

DiagonalShiftResult diagonal_shift(const SignMatrix& h, int sign) {
    if (sign != 1 && sign != -1) throw Error("diagonal_shift: sign must be +1 or -1");
    const std::size_t n = h.order();
    if (n < 2) throw Error("diagonal_shift: order must be at least 2");
    if (!is_symmetric(h)) throw Error("diagonal_shift: matrix not symmetric");
    if (!is_hadamard(h)) throw Error("diagonal_shift: matrix not Hadamard");

    ExactScalar shift = ExactScalar::sqrt_of(static_cast<unsigned long>(n));
    if (sign < 0) shift = -shift;

    ExactMatrix out = to_exact(h);
    std::vector<Change> changes;
    changes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExactScalar v = ExactScalar(h.at(i, i)) + shift;
        out.set(i, i, v);
        changes.push_back({i, i, v});
    }
    return {std::move(out), Perturbation(n, std::move(changes)), shift};
}

namespace {

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

std::size_t log2_exact(std::size_t v) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < v) ++k;
    return k;
}

} // namespace

nlohmann::json BlockDecomposition::to_json() const {
    return {{"order", order},
            {"block_size", block_size},
            {"grid_size", grid_size},
            {"blocks_match", blocks_match},
            {"grid_matches", grid_matches},
            {"mismatched_blocks", mismatched_blocks},
            {"ok", ok}};
}

BlockDecomposition block_decompose(const SignMatrix& h, std::size_t j) {
    BlockDecomposition out;
    out.order = h.order();
    if (!is_power_of_two(out.order)) {
        out.block_size = std::size_t{1} << j;
        return out; // not a 2^k order: verifies false
    }
    const std::size_t k = log2_exact(out.order);
    if (j > k) throw Error("block_decompose: j exceeds log2(order)");
    out.block_size = std::size_t{1} << j;
    out.grid_size = std::size_t{1} << (k - j);
    out.sign_grid.assign(out.grid_size * out.grid_size, 0);

    const SignMatrix block_ref = SignMatrix::sylvester(j);
    const std::size_t cells = out.grid_size * out.grid_size;

    std::vector<std::int8_t>& grid = out.sign_grid;
    parallel_for(0, cells, [&](std::size_t cell) {
        const std::size_t bi = cell / out.grid_size;
        const std::size_t bj = cell % out.grid_size;
        const std::size_t r0 = bi * out.block_size;
        const std::size_t c0 = bj * out.block_size;
        const int sign = h.at(r0, c0) * block_ref.at(0, 0);
        for (std::size_t i = 0; i < out.block_size; ++i)
            for (std::size_t jj = 0; jj < out.block_size; ++jj)
                if (h.at(r0 + i, c0 + jj) != sign * block_ref.at(i, jj)) {
                    grid[cell] = 0;
                    return;
                }
        grid[cell] = static_cast<std::int8_t>(sign);
    });

    out.mismatched_blocks = static_cast<std::size_t>(
        std::count(grid.begin(), grid.end(), static_cast<std::int8_t>(0)));
    out.blocks_match = (out.mismatched_blocks == 0);

    if (out.blocks_match) {
        const SignMatrix grid_ref = SignMatrix::sylvester(k - j);
        out.grid_matches = true;
        for (std::size_t i = 0; i < out.grid_size && out.grid_matches; ++i)
            for (std::size_t jj = 0; jj < out.grid_size; ++jj)
                if (out.sign_grid[i * out.grid_size + jj] != grid_ref.at(i, jj)) {
                    out.grid_matches = false;
                    break;
                }
    }
    out.ok = out.blocks_match && out.grid_matches;
    return out;
}

nlohmann::json BlockCountReport::to_json() const {
    return {{"k", k},
            {"r", r},
            {"value", rational_to_string(value)},
            {"value_float", value.get_d()},
            {"rigidity_bound", rational_to_string(rigidity_bound)},
            {"matches", matches},
            {"per_block_floor", per_block_floor}};
}

BlockCountReport midrijanis_lower_report(std::size_t k, std::size_t r) {
    if (k == 0) throw Error("midrijanis_lower_report: need k >= 1");
    const std::size_t n = std::size_t{1} << k;
    if (!is_power_of_two(r)) throw Error("midrijanis_lower_report: r must be a power of two");
    if (2 * r > n) throw Error("midrijanis_lower_report: need r <= n/2");

    BlockCountReport out;
    out.k = k;
    out.r = r;
    const Rational copies = make_rational(static_cast<long>(n), static_cast<long>(2 * r));
    out.value = copies * copies * static_cast<long>(r);
    const auto lb = rigidity_lower_bound({n, r, std::nullopt});
    out.rigidity_bound = lb.value;
    out.matches = lb.applicable && (out.value == out.rigidity_bound);
    // each +-H_{2r} copy has full rank 2r; dropping to rank r needs >= r changes
    out.per_block_floor = valiant_floor({2 * r, r, std::nullopt});
    return out;
}

} // namespace riglab
