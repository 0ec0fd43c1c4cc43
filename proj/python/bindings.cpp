#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotrng/battery.hpp"
#include "rotrng/estimators.hpp"
#include "rotrng/harness.hpp"
#include "rotrng/pipeline.hpp"

namespace py = pybind11;
using namespace rotrng;

namespace {

py::bytes to_py(const std::vector<std::uint8_t>& bytes) {
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

BitStream from_py(const py::bytes& data, std::optional<std::size_t> nbits) {
    const std::string raw = data;
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size());
    BitStream all = BitStream::from_bytes(bytes);
    if (!nbits || *nbits == all.size()) {
        return all;
    }
    if (*nbits > all.size()) {
        throw std::invalid_argument("nbits exceeds the data length");
    }
    BitStream prefix;
    prefix.reserve(*nbits);
    for (std::size_t i = 0; i < *nbits; ++i) {
        prefix.push_back(all[i]);
    }
    return prefix;
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

FsmState state_from_name(const std::string& name) {
    for (FsmState s : kAllFsmStates) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown FSM state '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_rotrng, m) {
    m.doc() = "Ring-oscillator TRNG simulator";

    py::class_<TrngParams>(m, "TrngParams")
        .def(py::init([](std::uint32_t n, std::uint32_t l, std::uint32_t d, std::uint32_t r, double f_clk_hz) {
                 TrngParams p{n, l, d, r, f_clk_hz};
                 p.validate();
                 return p;
             }),
             py::arg("n") = 20, py::arg("l") = 3, py::arg("d") = 0, py::arg("r") = 2, py::arg("f_clk_hz") = 50e6)
        .def_readwrite("n", &TrngParams::n)
        .def_readwrite("l", &TrngParams::l)
        .def_readwrite("d", &TrngParams::d)
        .def_readwrite("r", &TrngParams::r)
        .def_readwrite("f_clk_hz", &TrngParams::f_clk_hz)
        .def("__repr__", [](const TrngParams& p) {
            return "TrngParams(n=" + std::to_string(p.n) + ", l=" + std::to_string(p.l) + ", d=" +
                   std::to_string(p.d) + ", r=" + std::to_string(p.r) + ")";
        });

    py::class_<JitterModel>(m, "JitterModel")
        .def(py::init<>())
        .def_static("calibrated", &JitterModel::calibrated, py::arg("seed"))
        .def_static("noiseless", &JitterModel::noiseless, py::arg("seed") = 1)
        .def_readwrite("element_delay_ns", &JitterModel::element_delay_ns)
        .def_readwrite("jitter_sigma_ns", &JitterModel::jitter_sigma_ns)
        .def_readwrite("aperture_ns", &JitterModel::aperture_ns)
        .def_readwrite("freq_mismatch_sigma", &JitterModel::freq_mismatch_sigma)
        .def_readwrite("sampler_bias", &JitterModel::sampler_bias)
        .def_readwrite("seed", &JitterModel::seed);

    m.def(
        "generate",
        [](const TrngParams& p, const JitterModel& model, std::size_t nbits) {
            BitStream out;
            {
                py::gil_scoped_release release;
                out = trng_generate(p, model, nbits);
            }
            return to_py(out.to_bytes());
        },
        py::arg("params"), py::arg("model"), py::arg("nbits"),
        "Simulated TRNG output, packed LSB-first.");

    m.def(
        "multi_sampler_generate",
        [](std::uint32_t samplers, std::uint32_t ros, std::uint32_t l, const JitterModel& model, double f_clk_hz,
           std::size_t nbits) {
            BitStream out;
            {
                py::gil_scoped_release release;
                out = multi_sampler_generate(samplers, ros, l, model, f_clk_hz, nbits);
            }
            return to_py(out.to_bytes());
        },
        py::arg("samplers"), py::arg("ros_per_sampler"), py::arg("l"), py::arg("model"), py::arg("f_clk_hz") = 50e6,
        py::arg("nbits"));

    m.def(
        "resilience_xor",
        [](const py::bytes& data, std::size_t nbits, unsigned r) {
            const BitStream out = resilience_xor(from_py(data, nbits), r);
            return py::make_tuple(to_py(out.to_bytes()), out.size());
        },
        py::arg("data"), py::arg("nbits"), py::arg("r"), "Returns (packed bytes, bit count).");

    m.def(
        "battery",
        [](const py::bytes& data, std::optional<std::size_t> nbits, double alpha, std::size_t min_length) {
            const BitStream bits = from_py(data, nbits);
            TestReport report;
            {
                py::gil_scoped_release release;
                report = battery(bits, BatteryConfig{alpha, min_length});
            }
            py::list tests;
            for (const auto& t : report.tests) {
                py::dict row;
                row["test"] = t.name;
                row["statistic"] = t.outcome.statistic;
                row["p_value"] = t.outcome.p_value;
                row["applicable"] = t.outcome.applicable;
                row["passed"] = t.passed;
                tests.append(row);
            }
            py::dict out;
            out["tests"] = tests;
            out["passed"] = report.passed;
            out["length"] = report.length;
            out["alpha"] = report.alpha;
            out["reliable"] = report.reliable;
            return out;
        },
        py::arg("data"), py::arg("nbits") = py::none(), py::arg("alpha") = 1e-4, py::arg("min_length") = 1'000'000);

    m.def(
        "throughput",
        [](const std::string& f, unsigned d, unsigned r) { return rational(throughput(parse_decimal(f), d, r).bps); },
        py::arg("f_hz"), py::arg("d"), py::arg("r"), "Bits per second as (numerator, denominator).");

    m.def(
        "clb_count",
        [](const TrngParams& p) {
            const ResourceEstimate est = clb_count(p);
            py::list terms;
            for (const auto& t : est.breakdown) {
                terms.append(py::make_tuple(t.name, rational(t.clbs)));
            }
            return py::make_tuple(rational(est.clb_count), terms);
        },
        py::arg("params"));

    m.def(
        "table1",
        [](const std::string& f) {
            py::list rows;
            for (const auto& row : table1(parse_decimal(f))) {
                rows.append(py::make_tuple(row.d, row.r, row.n, row.l, rational(row.kbps)));
            }
            return rows;
        },
        py::arg("f_hz") = "50e6", "Rows (d, r, n, l, Kbps as (numerator, denominator)).");

    m.def(
        "capture",
        [](const TrngParams& p, const JitterModel& model, std::size_t nbytes, bool framed, std::size_t ram_bits) {
            Trng trng(p, model);
            HarnessConfig config;
            config.ram_bits = ram_bits;
            config.uart = framed ? UartModel::Framed8N1 : UartModel::RawBytes;
            config.f_clk_hz = p.f_clk_hz;
            CaptureResult res;
            {
                py::gil_scoped_release release;
                res = run_capture(trng, config, nbytes);
            }
            return py::make_tuple(to_py(res.bytes), to_py(res.trace));
        },
        py::arg("params"), py::arg("model"), py::arg("nbytes"), py::arg("framed") = false,
        py::arg("ram_bits") = 16384, "Returns (bytes, UART trace).");

    m.def(
        "uart_deframe",
        [](const py::bytes& trace) {
            const std::string raw = trace;
            return to_py(uart_deframe(
                std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size())));
        },
        py::arg("trace"));

    m.def(
        "fsm_step",
        [](const std::string& state, const py::dict& inputs) {
            FsmInputs in;
            auto flag = [&](const char* key) { return inputs.contains(key) && inputs[key].cast<bool>(); };
            in.bit_ready = flag("bit_ready");
            in.addr_wrapped = flag("addr_wrapped");
            in.sr_full = flag("sr_full");
            in.uart_busy = flag("uart_busy");
            in.addr_zero = flag("addr_zero");
            const FsmStep step = fsm_step(state_from_name(state), in);
            py::dict out;
            out["write_enable"] = step.outputs.write_enable;
            out["addr_inc"] = step.outputs.addr_inc;
            out["addr_reset"] = step.outputs.addr_reset;
            out["shift_en"] = step.outputs.shift_en;
            out["uart_send"] = step.outputs.uart_send;
            return py::make_tuple(std::string(to_string(step.next)), out);
        },
        py::arg("state"), py::arg("inputs") = py::dict());

    py::register_exception<CaptureUnderrun>(m, "CaptureUnderrun", PyExc_RuntimeError);
}
