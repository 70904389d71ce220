#include "gallery/csp.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace gallery::csp {

bool follows(std::span<const int> table, Direction dir) {
    for (std::size_t d = 1; d < table.size(); ++d) {
        if (dir == Direction::NonDecreasing ? table[d] < table[d - 1] : table[d] > table[d - 1]) return false;
    }
    return true;
}

void CspInstance::validate() const {
    if (N < 0) throw InvalidInstance("N must be non-negative");
    for (std::size_t idx = 0; idx < constraints.size(); ++idx) {
        const auto& c = constraints[idx];
        const std::string where = "constraint " + std::to_string(idx) + ": ";
        if (c.lhs >= var_count) throw InvalidInstance(where + "unknown variable");
        if (const auto* k = std::get_if<ConstRhs>(&c.rhs)) {
            int hi = c.cmp == Cmp::Ge ? N + 1 : N;
            if (k->beta < 0 || k->beta > hi) throw InvalidInstance(where + "constant out of range");
            continue;
        }
        const auto& f = std::get<FnRhs>(c.rhs);
        if (f.var >= var_count) throw InvalidInstance(where + "unknown variable");
        if (f.var == c.lhs) throw InvalidInstance(where + "binary constraint on a single variable");
        if (f.table.size() != static_cast<std::size_t>(N) + 1) throw InvalidInstance(where + "table length is not N+1");
        for (int v : f.table)
            if (v < 0 || v > N) throw InvalidInstance(where + "table value out of range");
        if (!follows(f.table, f.direction)) throw InvalidInstance(where + "table does not follow its direction");
    }
}

bool satisfies(const CspInstance& inst, const Assignment& alpha) {
    if (alpha.size() != inst.var_count) return false;
    for (int v : alpha)
        if (v < 0 || v > inst.N) return false;
    for (const auto& c : inst.constraints) {
        int lhs = alpha[c.lhs];
        int rhs = std::holds_alternative<ConstRhs>(c.rhs)
                      ? std::get<ConstRhs>(c.rhs).beta
                      : std::get<FnRhs>(c.rhs).table[static_cast<std::size_t>(alpha[std::get<FnRhs>(c.rhs).var])];
        if (c.cmp == Cmp::Le ? lhs > rhs : lhs < rhs) return false;
    }
    return true;
}

TwoSatInstance encode(const CspInstance& inst) {
    const int N = inst.N;
    TwoSatInstance ts;
    ts.var_count = inst.var_count * static_cast<std::size_t>(N + 2);
    auto at = [N](std::size_t x, int d) { return level_var(x, d, N); };

    for (std::size_t x = 0; x < inst.var_count; ++x) {
        ts.add_unit(Lit::pos(at(x, 0)));
        ts.add_unit(Lit::neg(at(x, N + 1)));
        for (int d = 1; d <= N + 1; ++d) ts.add_implication(Lit::pos(at(x, d)), Lit::pos(at(x, d - 1)));
    }

    for (const auto& c : inst.constraints) {
        const std::size_t xi = c.lhs;
        if (const auto* k = std::get_if<ConstRhs>(&c.rhs)) {
            if (c.cmp == Cmp::Le) {
                ts.add_unit(Lit::neg(at(xi, k->beta + 1)));
            } else if (k->beta > N) {
                ts.trivially_unsat = true;
            } else {
                ts.add_unit(Lit::pos(at(xi, k->beta)));
            }
            continue;
        }
        const auto& f = std::get<FnRhs>(c.rhs);
        const std::size_t xj = f.var;
        const bool nd = f.direction == Direction::NonDecreasing;
        for (int d = 0; d <= N; ++d) {
            const int fd = f.table[static_cast<std::size_t>(d)];
            if (c.cmp == Cmp::Ge && nd) {
                // x_j >= d  implies  x_i >= f(d)
                ts.add_implication(Lit::pos(at(xj, d)), Lit::pos(at(xi, fd)));
            } else if (c.cmp == Cmp::Ge) {
                // x_j <= d  implies  x_i >= f(d)
                ts.add_implication(Lit::neg(at(xj, d + 1)), Lit::pos(at(xi, fd)));
            } else if (nd) {
                // x_j <= d  implies  x_i <= f(d)
                ts.add_implication(Lit::neg(at(xj, d + 1)), Lit::neg(at(xi, fd + 1)));
            } else {
                // x_j >= d  implies  x_i <= f(d)
                ts.add_implication(Lit::pos(at(xj, d)), Lit::neg(at(xi, fd + 1)));
            }
        }
    }
    return ts;
}

std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& ts) {
    if (ts.trivially_unsat) return std::nullopt;
    const std::size_t nodes = 2 * ts.var_count;

    // Implication graph in CSR form: clause (a or b) gives ~a -> b and ~b -> a.
    std::vector<std::uint32_t> degree(nodes + 1, 0);
    for (const auto& [a, b] : ts.clauses) {
        ++degree[(~a).code];
        ++degree[(~b).code];
    }
    std::vector<std::uint32_t> start(nodes + 1, 0);
    for (std::size_t v = 0; v < nodes; ++v) start[v + 1] = start[v] + degree[v];
    std::vector<std::uint32_t> adj(start[nodes]);
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (const auto& [a, b] : ts.clauses) {
        adj[fill[(~a).code]++] = b.code;
        adj[fill[(~b).code]++] = a.code;
    }

    // Iterative Tarjan; components are numbered in reverse topological order.
    constexpr std::uint32_t kUnseen = UINT32_MAX;
    std::vector<std::uint32_t> index(nodes, kUnseen), low(nodes, 0), comp(nodes, kUnseen);
    std::vector<std::uint32_t> stack, call, edge;
    std::vector<bool> on_stack(nodes, false);
    std::uint32_t counter = 0, comps = 0;
    for (std::uint32_t root = 0; root < nodes; ++root) {
        if (index[root] != kUnseen) continue;
        call.push_back(root);
        edge.push_back(start[root]);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            std::uint32_t v = call.back();
            std::uint32_t& e = edge.back();
            if (e < start[v + 1]) {
                std::uint32_t w = adj[e++];
                if (index[w] == kUnseen) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back(w);
                    edge.push_back(start[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            call.pop_back();
            edge.pop_back();
            if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
        }
    }

    std::vector<bool> model(ts.var_count);
    for (std::size_t x = 0; x < ts.var_count; ++x) {
        auto p = comp[Lit::pos(x).code], n = comp[Lit::neg(x).code];
        if (p == n) return std::nullopt;
        model[x] = p < n;
    }
    return model;
}

Assignment extract(const CspInstance& inst, const std::vector<bool>& model) {
    const int N = inst.N;
    Assignment alpha(inst.var_count, 0);
    for (std::size_t x = 0; x < inst.var_count; ++x) {
        if (!model[level_var(x, 0, N)] || model[level_var(x, N + 1, N)])
            throw MalformedModel("variable " + std::to_string(x) + " has out-of-range levels");
        int d = 0;
        while (d + 1 <= N && model[level_var(x, d + 1, N)]) ++d;
        for (int rest = d + 1; rest <= N + 1; ++rest)
            if (model[level_var(x, rest, N)])
                throw MalformedModel("variable " + std::to_string(x) + " levels are not prefix-closed");
        alpha[x] = d;
    }
    return alpha;
}

std::optional<Assignment> solve_csp(const CspInstance& inst) {
    auto model = solve_2sat(encode(inst));
    if (!model) return std::nullopt;
    return extract(inst, *model);
}

namespace {

const char* cmp_name(Cmp c) {
    return c == Cmp::Le ? "le" : "ge";
}

[[noreturn]] void malformed(int line_no, const std::string& why) {
    throw InvalidInstance("line " + std::to_string(line_no) + ": " + why);
}

Cmp parse_cmp(const std::string& s, int line_no) {
    if (s == "le") return Cmp::Le;
    if (s == "ge") return Cmp::Ge;
    malformed(line_no, "expected le or ge, got '" + s + "'");
}

template <typename T>
T read_field(std::istringstream& in, int line_no, const char* what) {
    T value;
    if (!(in >> value)) malformed(line_no, std::string("expected ") + what);
    return value;
}

}  // namespace

CspInstance read_csp(std::istream& in) {
    CspInstance inst;
    std::string line;
    int line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (!header) {
            if (kind != "csp") malformed(line_no, "expected `csp <varCount> <N>`");
            long long vars = read_field<long long>(fields, line_no, "variable count");
            long long N = read_field<long long>(fields, line_no, "N");
            if (vars < 0 || N < 0 || N > 1'000'000) malformed(line_no, "bad header values");
            inst.var_count = static_cast<std::size_t>(vars);
            inst.N = static_cast<int>(N);
            header = true;
        } else if (kind == "const") {
            auto lhs = read_field<std::size_t>(fields, line_no, "variable");
            Cmp cmp = parse_cmp(read_field<std::string>(fields, line_no, "comparison"), line_no);
            int beta = read_field<int>(fields, line_no, "constant");
            inst.constraints.push_back(Constraint::constant(lhs, cmp, beta));
        } else if (kind == "fn") {
            auto lhs = read_field<std::size_t>(fields, line_no, "variable");
            Cmp cmp = parse_cmp(read_field<std::string>(fields, line_no, "comparison"), line_no);
            auto var = read_field<std::size_t>(fields, line_no, "variable");
            std::vector<int> table;
            for (int d = 0; d <= inst.N; ++d) table.push_back(read_field<int>(fields, line_no, "table value"));
            Direction dir = follows(table, Direction::NonDecreasing) ? Direction::NonDecreasing
                                                                      : Direction::NonIncreasing;
            if (!follows(table, dir)) malformed(line_no, "table is not monotone");
            inst.constraints.push_back(Constraint::function(lhs, cmp, var, std::move(table), dir));
        } else {
            malformed(line_no, "unknown line kind '" + kind + "'");
        }
        std::string extra;
        if (fields >> extra) malformed(line_no, "trailing content");
    }
    if (!header) throw InvalidInstance("missing `csp` header");
    try {
        inst.validate();
    } catch (const InvalidInstance& e) {
        throw InvalidInstance(std::string("invalid instance: ") + e.what());
    }
    return inst;
}

void write_csp(std::ostream& out, const CspInstance& inst) {
    out << "csp " << inst.var_count << ' ' << inst.N << '\n';
    for (const auto& c : inst.constraints) {
        if (const auto* k = std::get_if<ConstRhs>(&c.rhs)) {
            out << "const " << c.lhs << ' ' << cmp_name(c.cmp) << ' ' << k->beta << '\n';
            continue;
        }
        const auto& f = std::get<FnRhs>(c.rhs);
        out << "fn " << c.lhs << ' ' << cmp_name(c.cmp) << ' ' << f.var;
        for (int v : f.table) out << ' ' << v;
        out << '\n';
    }
}

std::string to_text(const CspInstance& inst) {
    std::ostringstream out;
    write_csp(out, inst);
    return out.str();
}

}  // namespace gallery::csp
