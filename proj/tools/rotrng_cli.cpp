// rotrng: ring-oscillator TRNG simulator, capture harness and test battery.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotrng/battery.hpp"
#include "rotrng/estimators.hpp"
#include "rotrng/harness.hpp"
#include "rotrng/io.hpp"
#include "rotrng/pipeline.hpp"
#include "rotrng/sweep.hpp"

namespace {

// Comma-separated unsigned list; an empty string is an empty list.
std::vector<std::uint32_t> parse_list(const std::string& text, const char* flag) {
    std::vector<std::uint32_t> values;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, end - start);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || item[0] == '-' || v > 0xFFFFFFFFUL) {
            throw std::invalid_argument(std::string(flag) + ": bad value '" + item + "'");
        }
        values.push_back(static_cast<std::uint32_t>(v));
        start = end + 1;
    }
    return values;
}

using namespace rotrng;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CircuitOptions {
    std::uint32_t n = 20;
    std::uint32_t l = 3;
    std::uint32_t d = 0;
    std::uint32_t r = 2;
    std::string f = "50e6";
    std::optional<std::uint64_t> seed;
    JitterModel model = JitterModel::calibrated(0);
    bool noiseless = false;

    TrngParams params() const { return {n, l, d, r, boost::rational_cast<double>(parse_decimal(f))}; }

    JitterModel jitter() const {
        JitterModel m = noiseless ? JitterModel::noiseless() : model;
        m.element_delay_ns = model.element_delay_ns;
        m.seed = seed.value_or(0);
        return m;
    }
};

void add_param_flags(CLI::App* cmd, CircuitOptions& o) {
    cmd->add_option("-n", o.n, "Number of ring oscillators")->capture_default_str();
    cmd->add_option("-l", o.l, "Delay elements per oscillator")->capture_default_str();
    cmd->add_option("-d", o.d, "Sampling clock divisor exponent (2^d)")->capture_default_str();
    cmd->add_option("-r", o.r, "Resilience block exponent (2^r bits per output)")->capture_default_str();
    cmd->add_option("-f", o.f, "Input clock frequency in Hz")->capture_default_str();
}

void add_model_flags(CLI::App* cmd, CircuitOptions& o, bool with_seed) {
    if (with_seed) {
        cmd->add_option("--seed", o.seed, "Simulation seed")->required();
    }
    cmd->add_option("--element-delay", o.model.element_delay_ns, "Delay element propagation delay [ns]")
        ->capture_default_str();
    cmd->add_option("--sigma", o.model.jitter_sigma_ns, "Jitter std-dev per half-period [ns]")->capture_default_str();
    cmd->add_option("--aperture", o.model.aperture_ns, "Metastability aperture half-width [ns]")
        ->capture_default_str();
    cmd->add_option("--mismatch", o.model.freq_mismatch_sigma, "Relative oscillator frequency spread")
        ->capture_default_str();
    cmd->add_option("--sampler-bias", o.model.sampler_bias, "Bias of the sampler's metastable resolution")
        ->capture_default_str();
    cmd->add_flag("--noiseless", o.noiseless, "Disable every noise source");
}

void print_throughput(const CircuitOptions& o) {
    const auto est = throughput(parse_decimal(o.f), o.d, o.r);
    std::cout << "throughput: " << format_rational(est.bps) << " bps (" << format_rational(est.kbps())
              << " Kbps)\n";
}

int cmd_generate(const CircuitOptions& o, std::size_t bits, const std::string& out, const std::string& format,
                 std::uint32_t samplers) {
    const TrngParams params = o.params();
    const JitterModel model = o.jitter();
    BitStream stream;
    if (samplers > 0) {
        stream = multi_sampler_generate(samplers, params.n, params.l, model, params.f_clk_hz, bits);
        std::cout << "throughput: " << format_rational(throughput(parse_decimal(o.f), 0, 0).bps) << " bps\n";
    } else {
        stream = trng_generate(params, model, bits);
        print_throughput(o);
    }
    const auto bytes = stream.to_bytes();
    if (format == "raw") {
        write_bytes_file(out, bytes);
    } else {
        std::vector<std::uint8_t> trace;
        trace.reserve(bytes.size() * 10);
        for (auto b : bytes) {
            const auto frame = uart_frame(b);
            trace.insert(trace.end(), frame.begin(), frame.end());
        }
        write_bit_trace(out, trace);
    }
    std::cout << "wrote " << stream.size() << " bits to " << out << '\n';
    return 0;
}

int cmd_capture(const CircuitOptions& o, std::size_t nbytes, const std::string& out, const std::string& uart,
                double baud, std::size_t ram_bits, const std::string& trace_out) {
    const TrngParams params = o.params();
    Trng trng(params, o.jitter());
    HarnessConfig config;
    config.ram_bits = ram_bits;
    config.uart = uart == "framed" ? UartModel::Framed8N1 : UartModel::RawBytes;
    config.baud = baud;
    config.f_clk_hz = params.f_clk_hz;
    if (!trace_out.empty() && config.uart != UartModel::Framed8N1) {
        throw std::invalid_argument("--trace-out requires --uart framed");
    }
    const CaptureResult result = run_capture(trng, config, nbytes);
    write_bytes_file(out, result.bytes);
    if (!trace_out.empty()) {
        write_bit_trace(trace_out, result.trace);
    }
    print_throughput(o);
    std::cout << "captured " << result.bytes.size() << " bytes in " << result.ram_fills << " RAM fills, "
              << result.cycles << " harness cycles\n";
    return 0;
}

int cmd_test(const std::string& in, double alpha, std::size_t min_bits, const std::string& report_path) {
    const auto bytes = read_bytes_file(in);
    const BitStream bits = BitStream::from_bytes(bytes);
    if (bits.size() < 100) {
        std::cerr << "error: '" << in << "' holds only " << bits.size() << " bits\n";
        return kExitError;
    }
    BatteryConfig config;
    config.alpha = alpha;
    config.min_length = min_bits;
    const TestReport report = battery(bits, config);
    write_report_table(std::cout, report);
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) {
            throw std::runtime_error("cannot open for writing '" + report_path + "'");
        }
        if (report_path.ends_with(".csv")) {
            write_report_csv(os, report);
        } else if (report_path.ends_with(".json")) {
            write_report_json(os, report);
        } else {
            write_report_table(os, report);
        }
    }
    return report.passed ? 0 : kExitFail;
}

int cmd_sweep(SweepSpec spec, const std::string& out) {
    const auto rows = run_sweep(spec);
    if (out.empty()) {
        write_sweep_csv(std::cout, rows);
    } else {
        std::ofstream os(out);
        if (!os) {
            throw std::runtime_error("cannot open for writing '" + out + "'");
        }
        write_sweep_csv(os, rows);
    }
    const auto cells = spec.cells();
    const auto fractions = pass_fractions(rows, cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::cerr << "n=" << cells[c].n << " l=" << cells[c].l << " d=" << cells[c].d << " r=" << cells[c].r
                  << "  pass fraction " << fractions[c] << '\n';
    }
    return 0;
}

int cmd_estimate(const CircuitOptions& o, bool table, bool csv) {
    const Rational f = parse_decimal(o.f);
    if (table) {
        const auto rows = table1(f);
        if (csv) {
            write_table1_csv(std::cout, rows);
        } else {
            write_table1_text(std::cout, rows);
        }
        return 0;
    }
    const auto tp = throughput(f, o.d, o.r);
    const auto res = clb_count({o.n, o.l, o.d, o.r, boost::rational_cast<double>(f)});
    if (csv) {
        std::cout << "quantity,value\nthroughput_bps," << format_rational(tp.bps) << '\n';
        for (const auto& term : res.breakdown) {
            std::cout << "clb_" << term.name << ',' << format_rational(term.clbs) << '\n';
        }
        std::cout << "clb_total," << format_rational(res.clb_count) << '\n';
        return 0;
    }
    std::cout << "throughput: " << format_rational(tp.bps) << " bps (" << format_rational(tp.kbps()) << " Kbps)\n";
    std::cout << "CLBs: " << format_rational(res.clb_count) << " (about " << res.rounded_up() << ")\n";
    for (const auto& term : res.breakdown) {
        std::cout << "  " << term.name << ": " << format_rational(term.clbs) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ring-oscillator TRNG simulator, capture harness and statistical test battery"};
    app.require_subcommand(1);

    CircuitOptions circuit;

    auto* gen = app.add_subcommand("generate", "Simulate the TRNG and write its output");
    std::size_t gen_bits = 0;
    std::string gen_out;
    std::string gen_format = "raw";
    std::uint32_t gen_samplers = 0;
    add_param_flags(gen, circuit);
    add_model_flags(gen, circuit, true);
    gen->add_option("--bits", gen_bits, "Output bits")->required();
    gen->add_option("-o,--out", gen_out, "Output file")->required();
    gen->add_option("--format", gen_format, "raw (LSB-first bytes) or trace (8N1 bit text)")
        ->check(CLI::IsMember({"raw", "trace"}))
        ->capture_default_str();
    gen->add_option("--samplers", gen_samplers,
                    "Use the multi-sampler design with this many samplers of n oscillators (d=r=0)");

    auto* cap = app.add_subcommand("capture", "Generate through the RAM/FSM/UART measurement harness");
    std::size_t cap_bytes = 0;
    std::string cap_out;
    std::string cap_uart = "raw";
    double cap_baud = 115200.0;
    std::size_t cap_ram = 16384;
    std::string cap_trace;
    add_param_flags(cap, circuit);
    add_model_flags(cap, circuit, true);
    cap->add_option("--bytes", cap_bytes, "Bytes to capture")->required();
    cap->add_option("-o,--out", cap_out, "Raw byte output file")->required();
    cap->add_option("--uart", cap_uart, "UART model: raw or framed")
        ->check(CLI::IsMember({"raw", "framed"}))
        ->capture_default_str();
    cap->add_option("--baud", cap_baud, "Baud rate (framed model)")->capture_default_str();
    cap->add_option("--ram-bits", cap_ram, "Capture RAM size in bits")->capture_default_str();
    cap->add_option("--trace-out", cap_trace, "Write the framed UART bit trace here");

    auto* test = app.add_subcommand("test", "Run the statistical battery on a raw binary file");
    std::string test_in;
    double test_alpha = 1e-4;
    std::size_t test_min = 1'000'000;
    std::string test_report;
    test->add_option("-i,--in", test_in, "Input file (raw bytes, LSB-first)")->required();
    test->add_option("--alpha", test_alpha, "Two-sided significance bound")->capture_default_str();
    test->add_option("--min-bits", test_min, "Length below which the report is marked unreliable")
        ->capture_default_str();
    test->add_option("--report", test_report, "Report file (.json, .csv or text)");

    auto* sweep = app.add_subcommand("sweep", "Run the battery over a parameter grid and seeds");
    SweepSpec spec;
    std::optional<std::uint64_t> sweep_seed;
    std::string sweep_out;
    std::string grid_n = "20";
    std::string grid_l = "3";
    std::string grid_d = "0";
    std::string grid_r = "2";
    sweep->add_option("--n", grid_n, "Oscillator counts, comma separated")->capture_default_str();
    sweep->add_option("--l", grid_l, "Oscillator lengths, comma separated")->capture_default_str();
    sweep->add_option("--d", grid_d, "Divisor exponents, comma separated")->capture_default_str();
    sweep->add_option("--r", grid_r, "Resilience exponents, comma separated")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "First seed")->required();
    sweep->add_option("--seeds", spec.seeds, "Seeds per cell")->capture_default_str();
    sweep->add_option("--bits", spec.bits, "Bits per run")->capture_default_str();
    sweep->add_option("--alpha", spec.battery.alpha, "Two-sided significance bound")->capture_default_str();
    sweep->add_option("-f", circuit.f, "Input clock frequency in Hz")->capture_default_str();
    sweep->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();
    sweep->add_option("-o,--out", sweep_out, "CSV output (default stdout)");
    add_model_flags(sweep, circuit, false);

    auto* est = app.add_subcommand("estimate", "Throughput and CLB estimates");
    bool est_table = false;
    bool est_csv = false;
    add_param_flags(est, circuit);
    est->add_flag("--table1", est_table, "Print the recommended parameter table");
    est->add_flag("--csv", est_csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; usage errors share the error code.
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (*gen) {
            return cmd_generate(circuit, gen_bits, gen_out, gen_format, gen_samplers);
        }
        if (*cap) {
            return cmd_capture(circuit, cap_bytes, cap_out, cap_uart, cap_baud, cap_ram, cap_trace);
        }
        if (*test) {
            return cmd_test(test_in, test_alpha, test_min, test_report);
        }
        if (*sweep) {
            spec.n_values = parse_list(grid_n, "--n");
            spec.l_values = parse_list(grid_l, "--l");
            spec.d_values = parse_list(grid_d, "--d");
            spec.r_values = parse_list(grid_r, "--r");
            spec.first_seed = *sweep_seed;
            spec.f_clk_hz = boost::rational_cast<double>(parse_decimal(circuit.f));
            spec.model = circuit.jitter();
            return cmd_sweep(spec, sweep_out);
        }
        if (*est) {
            return cmd_estimate(circuit, est_table, est_csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
