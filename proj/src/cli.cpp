#include "valsyz/cli.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "valsyz/echelon.hpp"
#include "valsyz/syzygy.hpp"
#include "valsyz/text.hpp"
#include "valsyz/verify.hpp"

namespace valsyz::cli {

Task parse_task(std::string_view name) {
    if (name == "saturate-free") return Task::SaturateFree;
    if (name == "saturate-vx") return Task::SaturateVx;
    if (name == "syzygy") return Task::Syzygy;
    throw Error(Errc::ParseError, "unknown task '" + std::string(name) + "'");
}

std::string_view task_name(Task task) {
    switch (task) {
        case Task::SaturateFree: return "saturate-free";
        case Task::SaturateVx: return "saturate-vx";
        case Task::Syzygy: return "syzygy";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> out;
    while (!s.empty()) {
        auto nl = s.find('\n');
        auto line = s.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back(line);
        if (nl == std::string_view::npos) break;
        s.remove_prefix(nl + 1);
    }
    return out;
}

/// "name:" with nothing after it.
bool is_section_header(std::string_view line) {
    line = trim(line);
    if (line.size() < 2 || line.back() != ':') return false;
    for (char c : line.substr(0, line.size() - 1))
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '-')) return false;
    return true;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

int parse_int(std::string_view value, std::size_t line, std::size_t column, int low) {
    int out = 0;
    bool any = false;
    for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail_at(line, column, "expected a nonnegative integer");
        if (out > 100'000'000) fail_at(line, column, "integer too large");
        out = out * 10 + (c - '0');
        any = true;
    }
    if (!any) fail_at(line, column, "expected a nonnegative integer");
    if (out < low) fail_at(line, column, "value must be at least " + std::to_string(low));
    return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view contents) {
    InstanceFile inst;
    bool in_vectors = false;
    auto lines = split_lines(contents);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        std::string_view raw = lines[i];
        std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (in_vectors) {
            // A further section (trace, diagrams, ...) ends the vector list.
            if (is_section_header(line)) break;
            inst.vectors.push_back({lineno, std::string(line)});
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) fail_at(lineno, 1, "expected 'key: value'");
        auto key = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));
        std::size_t value_col = static_cast<std::size_t>(value.data() - raw.data()) + 1;
        if (key == "vectors") {
            if (!value.empty()) fail_at(lineno, value_col, "vectors go on the following lines");
            in_vectors = true;
        } else if (key == "domain") {
            try {
                inst.domain = DomainSpec::parse(value);
            } catch (const Error& e) {
                if (e.code() == Errc::NotPrime) throw;
                fail_at(lineno, value_col, e.detail());
            }
        } else if (key == "task") {
            try {
                inst.task = parse_task(value);
            } catch (const Error& e) {
                fail_at(lineno, value_col, e.detail());
            }
        } else if (key == "degree-bound") {
            inst.degree_bound = parse_int(value, lineno, value_col, 0);
        } else if (key == "max-iter") {
            inst.max_iter = parse_int(value, lineno, value_col, 1);
        } else if (key == "verify") {
            if (value == "true" || value == "yes") inst.verify = true;
            else if (value == "false" || value == "no") inst.verify = false;
            else fail_at(lineno, value_col, "expected true or false");
        } else if (key == "result" || key == "verified") {
            // Written by result documents; ignored so they can be read back.
        } else {
            fail_at(lineno, 1, "unknown key '" + std::string(key) + "'");
        }
    }
    return inst;
}

std::string pivot_diagram(const std::vector<PivotIndex>& older, const std::vector<PivotIndex>& current,
                          std::size_t n, int max_exp) {
    std::map<int, int> top;
    for (const auto& p : current) {
        auto [it, fresh] = top.emplace(p.index, p.exponent);
        if (!fresh) it->second = std::max(it->second, p.exponent);
    }
    const std::size_t width = static_cast<std::size_t>(max_exp < 0 ? 0 : max_exp + 1);
    std::vector<std::vector<char>> grid(n, std::vector<char>(width, '.'));
    auto put = [&](const PivotIndex& p, char glyph) {
        if (p.index < 1 || static_cast<std::size_t>(p.index) > n || p.exponent < 0 ||
            static_cast<std::size_t>(p.exponent) >= width)
            return;
        grid[static_cast<std::size_t>(p.index - 1)][static_cast<std::size_t>(p.exponent)] = glyph;
    };
    for (const auto& p : older) put(p, 'o');
    for (const auto& p : current) put(p, p.exponent < top[p.index] ? '@' : 'O');

    auto label = [](std::size_t i) { return "i=" + std::to_string(i) + " |"; };
    std::string out(label(n).size() - 1, ' ');
    out += "|";
    for (std::size_t r = 0; r < width; ++r) out += " " + std::to_string(r);
    out += "\n";
    for (std::size_t i = n; i >= 1; --i) {
        auto& row = grid[i - 1];
        bool empty = std::all_of(row.begin(), row.end(), [](char c) { return c == '.'; });
        out += label(i);
        for (char c : row) {
            out += ' ';
            out += empty ? '#' : c;
        }
        out += "\n";
    }
    return out;
}

std::string trace_csv(const std::vector<IterationRecord>& trace) {
    std::ostringstream os;
    os << "k,N_k,r_k,n_k,u_k,delta_k,Delta_k\n";
    for (const auto& t : trace)
        os << t.k << ',' << t.N << ',' << t.r << ',' << t.n << ',' << t.u << ',' << t.delta << ',' << t.Delta << '\n';
    return os.str();
}

std::vector<std::string> result_vector_lines(std::string_view document) {
    std::vector<std::string> out;
    bool in_vectors = false;
    for (auto line : split_lines(document)) {
        auto t = trim(line);
        if (!in_vectors) {
            in_vectors = t == "vectors:";
            continue;
        }
        if (is_section_header(t)) break;
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

namespace {

struct Outcome {
    std::string document;
    std::string trace;
    std::string diagrams;
    bool mismatch = false;
};

template <ValuationDomain D>
std::vector<PolyVec<element_t<D>>> parse_vectors(const D& dom, const std::vector<VectorLine>& lines) {
    std::vector<PolyVec<element_t<D>>> out;
    for (const auto& l : lines) {
        try {
            out.push_back(parse_polyvec(dom, l.text));
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(l.line) + ", " + e.detail());
        }
        if (out.back().size() != out.front().size())
            throw Error(Errc::ParseError, "line " + std::to_string(l.line) + ": vector has " +
                                              std::to_string(out.back().size()) + " components, expected " +
                                              std::to_string(out.front().size()));
    }
    if (out.empty()) throw Error(Errc::EmptyInput, "no vectors given");
    return out;
}

template <ValuationDomain D>
std::string vector_block(const D& dom, const std::vector<PolyVec<element_t<D>>>& vs) {
    std::string out;
    for (const auto& v : vs) out += render_polyvec(dom, v) + "\n";
    return out;
}

/// One diagram per round, rebuilt from the trace: G only grows by appending,
/// so G_k is the first r_k columns and H_k the last N_k of those.
template <ValuationDomain D>
std::string round_diagrams(const D& dom, const SaturationResult<element_t<D>>& res, std::size_t n) {
    using Vec = PolyVec<element_t<D>>;
    const auto& cols = res.G.cols();
    const int max_exp = res.d + res.final_round();
    std::string out;
    for (const auto& t : res.trace) {
        std::vector<Vec> G(cols.begin(), cols.begin() + t.r);
        std::vector<Vec> H(cols.begin() + (t.r - t.N), cols.begin() + t.r);
        out += "k=" + std::to_string(t.k) + "\n" + pivot_diagram(dom, G, H, n, max_exp);
    }
    return out;
}

std::string header(const DomainSpec& spec, Task task, std::string_view result) {
    return "domain: " + spec.str() + "\ntask: " + std::string(task_name(task)) + "\nresult: " + std::string(result) +
           "\n";
}

template <ValuationDomain D>
Outcome execute(const D& dom, const DomainSpec& spec, Task task, const InstanceFile& inst, const RunOptions& opts,
                bool verify, std::ostream& err) {
    auto vectors = parse_vectors(dom, inst.vectors);
    const int max_iter = opts.max_iter.value_or(inst.max_iter.value_or(default_max_iter));
    const auto bound = opts.degree_bound ? opts.degree_bound : inst.degree_bound;
    Outcome o;
    std::string verdict;

    if (task == Task::SaturateFree) {
        auto G = saturate_free(dom, vectors);
        if (verify) {
            o.mismatch = !free_saturation_agrees(dom, vectors, G);
            if (o.mismatch) err << "verify: the basis and the oracle span different V-modules\n";
        }
        if (opts.diagram) {
            int max_exp = family_degree(vectors);
            o.diagrams = "k=0\n" + pivot_diagram(dom, G.cols(), G.cols(), vectors.front().size(), max_exp);
        }
        o.document = header(spec, task, "basis");
        if (verify) o.document += std::string("verified: ") + (o.mismatch ? "disagree" : "agree") + "\n";
        o.document += "vectors:\n" + vector_block(dom, G.cols());
    } else if (task == Task::SaturateVx) {
        auto res = saturate_vx(dom, vectors, max_iter);
        if (verify) {
            int D_ = bound.value_or(res.d + res.final_round() + 2);
            auto a = vx_saturation_agrees(dom, vectors, res.B, res.final_round(), D_);
            o.mismatch = !a.ok();
            if (!a.generators_saturated) err << "verify: a generator is not in the oracle saturation\n";
            if (!a.saturation_generated) err << "verify: an oracle vector of degree <= " << D_ << " is not generated\n";
        }
        o.trace = trace_csv(res.trace);
        if (opts.diagram) o.diagrams = round_diagrams(dom, res, vectors.front().size());
        o.document = header(spec, task, "generators");
        if (verify) o.document += std::string("verified: ") + (o.mismatch ? "disagree" : "agree") + "\n";
        o.document += "vectors:\n" + vector_block(dom, res.B);
    } else {
        auto res = syzygy_vx(dom, vectors, max_iter);
        if (verify) {
            int d = res.scaled.empty() ? 0 : res.saturation.d;
            int D_ = bound.value_or(d + res.saturation.final_round() + 2);
            auto a = syzygies_agree(dom, vectors, res, D_);
            o.mismatch = !a.ok();
            if (!a.generators_are_syzygies) err << "verify: a generator is not a syzygy over V[X]\n";
            if (!a.syzygies_generated) err << "verify: an oracle syzygy of degree <= " << D_ << " is not generated\n";
        }
        if (!res.scaled.empty()) {
            o.trace = trace_csv(res.saturation.trace);
            if (opts.diagram) o.diagrams = round_diagrams(dom, res.saturation, vectors.size());
        }
        o.document = header(spec, task, "generators");
        if (verify) o.document += std::string("verified: ") + (o.mismatch ? "disagree" : "agree") + "\n";
        o.document += "vectors:\n" + vector_block(dom, res.generators());
        o.document += "scaled:\n" + vector_block(dom, res.scaled);
    }
    if (!o.trace.empty()) o.document += "trace:\n" + o.trace;
    if (!o.diagrams.empty()) o.document += "diagrams:\n" + o.diagrams;
    return o;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::ParseError, "cannot write " + path.string());
    f << text;
}

}  // namespace

int run_text(std::string_view contents, const RunOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        InstanceFile inst = parse_instance(contents);
        auto task = opts.task ? opts.task : inst.task;
        auto spec = opts.domain ? opts.domain : inst.domain;
        if (!task) throw Error(Errc::ParseError, "no task given (instance header 'task:' or --task)");
        if (!spec) throw Error(Errc::ParseError, "no domain given (instance header 'domain:' or --domain)");
        const bool verify = opts.verify || inst.verify;

        Outcome o = std::visit(
            [&](const auto& dom) { return execute(dom, *spec, *task, inst, opts, verify, err); }, make_domain(*spec));

        out << o.document;
        if (opts.out_dir) {
            std::filesystem::create_directories(*opts.out_dir);
            write_file(*opts.out_dir / "result.txt", o.document);
            if (!o.trace.empty()) write_file(*opts.out_dir / "trace.csv", o.trace);
            if (!o.diagrams.empty()) write_file(*opts.out_dir / "diagram.txt", o.diagrams);
        }
        return o.mismatch ? exit_verify_mismatch : exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int run(const std::filesystem::path& path, const RunOptions& opts, std::ostream& out, std::ostream& err) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot read " << path.string() << "\n";
        return exit_input_error;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    return run_text(buf.str(), opts, out, err);
}

}  // namespace valsyz::cli
