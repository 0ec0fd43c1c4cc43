#include "rotrng/sweep.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rotrng/pipeline.hpp"

namespace rotrng {

std::vector<TrngParams> SweepSpec::cells() const {
    std::vector<TrngParams> out;
    for (auto n : n_values) {
        for (auto l : l_values) {
            for (auto d : d_values) {
                for (auto r : r_values) {
                    out.push_back({n, l, d, r, f_clk_hz});
                }
            }
        }
    }
    return out;
}

void SweepSpec::validate() const {
    if (n_values.empty() || l_values.empty() || d_values.empty() || r_values.empty()) {
        throw std::invalid_argument("sweep: parameter grid is empty");
    }
    if (seeds == 0) {
        throw std::invalid_argument("sweep: at least one seed is required");
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto grid = spec.cells();

    std::vector<SweepRow> rows;
    rows.reserve(grid.size() * spec.seeds);
    for (std::size_t c = 0; c < grid.size(); ++c) {
        for (std::uint32_t s = 0; s < spec.seeds; ++s) {
            SweepRow& row = rows.emplace_back();
            row.cell = c;
            row.params = grid[c];
            row.seed = spec.first_seed + s;
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            SweepRow& row = rows[i];
            try {
                JitterModel model = spec.model;
                model.seed = row.seed;
                row.report = battery(trng_generate(row.params, model, spec.bits), spec.battery);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(rows.size())));
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    const auto names = battery_test_names();
    os << "n,l,d,r,seed";
    for (const auto& name : names) {
        os << ',' << name;
    }
    os << ",pass,error\n";
    const auto old_precision = os.precision(10);
    for (const auto& row : rows) {
        os << row.params.n << ',' << row.params.l << ',' << row.params.d << ',' << row.params.r << ',' << row.seed;
        for (const auto& name : names) {
            os << ',';
            if (row.report) {
                if (const auto* t = row.report->find(name)) {
                    os << t->outcome.p_value;
                }
            }
        }
        std::string error = row.error;
        for (auto& c : error) {
            if (c == ',' || c == '\n' || c == '\r') {
                c = ';';
            }
        }
        os << ',' << (row.passed() ? 1 : 0) << ',' << error << '\n';
    }
    os.precision(old_precision);
}

std::vector<double> pass_fractions(const std::vector<SweepRow>& rows, std::size_t cells) {
    std::vector<double> passed(cells, 0.0);
    std::vector<double> total(cells, 0.0);
    for (const auto& row : rows) {
        if (row.cell < cells) {
            total[row.cell] += 1.0;
            passed[row.cell] += row.passed() ? 1.0 : 0.0;
        }
    }
    for (std::size_t c = 0; c < cells; ++c) {
        passed[c] = total[c] > 0.0 ? passed[c] / total[c] : 0.0;
    }
    return passed;
}

}  // namespace rotrng
