#pragma once

// Adapter around an external SMT-LIB 2 solver process (z3 by default).
// One instance owns one solver process and drives it lock-step with
// :print-success. The full command history is kept per push level, so a
// crashed or killed process is respawned and replayed transparently.
//
// Every satisfiable answer is re-checked against the query with the
// exact evaluator before it is returned; a model that fails to check is
// blocked and the query repeated.

#include "reacsynth/eval.hpp"
#include "reacsynth/expr.hpp"
#include "reacsynth/model.hpp"
#include "reacsynth/smt/printer.hpp"
#include "reacsynth/smt/process.hpp"
#include "reacsynth/smt/sexpr.hpp"
#include "reacsynth/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace reacsynth::smt {

struct SatResult {
    enum class Status { Sat, Unsat, Unknown };
    Status status = Status::Unknown;
    Model model;        // populated when Sat
    std::string reason; // populated when Unknown

    bool is_sat() const { return status == Status::Sat; }
    bool is_unsat() const { return status == Status::Unsat; }
    bool is_unknown() const { return status == Status::Unknown; }

    static SatResult sat(Model m) { return {Status::Sat, std::move(m), {}}; }
    static SatResult unsat() { return {Status::Unsat, {}, {}}; }
    static SatResult unknown(std::string why) { return {Status::Unknown, {}, std::move(why)}; }
};

struct ValidityResult {
    enum class Status { Valid, CounterModel, Unknown };
    Status status = Status::Unknown;
    Model counter;
    std::string reason;

    bool is_valid() const { return status == Status::Valid; }
    bool has_counter() const { return status == Status::CounterModel; }
    bool is_unknown() const { return status == Status::Unknown; }
};

inline std::string default_solver_path() {
    if (const char* p = std::getenv("REACSYNTH_SOLVER"); p && *p) return p;
    return "z3";
}

struct SolverConfig {
    std::string path = default_solver_path();
    std::vector<std::string> args{"-in", "-smt2"};
    std::string logic = "ALL";
    std::string query_log_dir;        // empty disables logging
    double command_timeout_s = 600.0; // watchdog when no tighter budget applies
};

inline std::optional<Value> parse_smt_value(const SExpr& e, Sort sort) {
    if (e.is_atom) {
        if (e.sym == "true") return Value(true);
        if (e.sym == "false") return Value(false);
        try {
            Rational r = parse_rational(e.sym);
            if (sort == Sort::Int && !is_integer(r)) return std::nullopt;
            return Value(std::move(r));
        } catch (...) {
            return std::nullopt;
        }
    }
    if (e.items.empty() || !e.items[0].is_atom) return std::nullopt;
    const std::string& head = e.items[0].sym;
    if (head == "-" && e.items.size() == 2) {
        auto v = parse_smt_value(e.items[1], sort);
        if (!v || !std::holds_alternative<Rational>(*v)) return std::nullopt;
        return Value(-std::get<Rational>(*v));
    }
    if (head == "/" && e.items.size() == 3) {
        auto a = parse_smt_value(e.items[1], Sort::Real);
        auto b = parse_smt_value(e.items[2], Sort::Real);
        if (!a || !b || !std::holds_alternative<Rational>(*a) ||
            !std::holds_alternative<Rational>(*b))
            return std::nullopt;
        const Rational& d = std::get<Rational>(*b);
        if (d == 0) return std::nullopt;
        return Value(std::get<Rational>(*a) / d);
    }
    if (head == "to_real" && e.items.size() == 2) return parse_smt_value(e.items[1], Sort::Real);
    return std::nullopt;
}

class SmtSolver {
public:
    explicit SmtSolver(SolverConfig cfg = {}) : cfg_(std::move(cfg)) { start(); }

    SmtSolver(const SmtSolver&) = delete;
    SmtSolver& operator=(const SmtSolver&) = delete;

    ~SmtSolver() {
        if (proc_.running()) proc_.write_all("(exit)\n");
    }

    const SolverConfig& config() const { return cfg_; }
    std::size_t num_checks() const { return checks_; }

    // ------------------------------------------------- primitive layer

    void push() {
        frames_.emplace_back();
        command("(push 1)");
    }

    void pop() {
        if (frames_.size() <= 1) throw SolverError("pop on empty frame stack");
        frames_.pop_back();
        command("(pop 1)");
    }

    void declare(const Var& v) { command(smt_declare(v)); }

    void declare_all(std::vector<Var> scope) {
        std::sort(scope.begin(), scope.end());
        std::set<std::string> seen;
        for (const auto& v : scope)
            if (seen.insert(v.name).second) declare(v);
    }

    void assert_formula(const Formula& f) { command("(assert " + smt_formula(f) + ")"); }

    // check-sat on the current stack; model over `model_scope` when sat
    SatResult check(const std::vector<Var>& model_scope, const Budget& budget = {}) {
        ++checks_;
        log_query();
        if (!write_or_revive("(check-sat)\n")) return SatResult::unknown("solver unreachable");
        auto answer = read_unit(budget);
        if (!answer) {
            restart();
            return SatResult::unknown("timeout");
        }
        if (*answer == "unsat") return SatResult::unsat();
        if (*answer == "unknown") return SatResult::unknown("solver returned unknown");
        if (*answer != "sat") {
            restart();
            return SatResult::unknown("unexpected solver answer: " + *answer);
        }
        if (model_scope.empty()) return SatResult::sat(Model{});
        auto model = fetch_model(model_scope, budget);
        if (!model) return SatResult::unknown(model_error_);
        return SatResult::sat(std::move(*model));
    }

    // --------------------------------------------------- scoped layer

    SatResult check_sat(const Formula& f, const std::vector<Var>& scope,
                        const Budget& budget = {}) {
        push();
        SatResult r;
        try {
            declare_all(scope);
            assert_formula(f);
            r = checked_model_loop(f, scope, budget);
        } catch (...) {
            pop();
            throw;
        }
        pop();
        return r;
    }

    ValidityResult check_valid(const Formula& f, const std::vector<Var>& scope,
                               const Budget& budget = {}) {
        SatResult r = check_sat(mk_not(f), scope, budget);
        ValidityResult v;
        switch (r.status) {
            case SatResult::Status::Unsat: v.status = ValidityResult::Status::Valid; break;
            case SatResult::Status::Sat:
                v.status = ValidityResult::Status::CounterModel;
                v.counter = std::move(r.model);
                break;
            case SatResult::Status::Unknown:
                v.status = ValidityResult::Status::Unknown;
                v.reason = std::move(r.reason);
                break;
        }
        return v;
    }

    // model validation loop shared by scoped queries: block models that
    // fail the exact evaluator and ask again
    SatResult checked_model_loop(const Formula& f, const std::vector<Var>& scope,
                                 const Budget& budget) {
        for (int attempt = 0; attempt < 3; ++attempt) {
            SatResult r = check(scope, budget);
            if (!r.is_sat()) return r;
            bool ok = false;
            try {
                ok = eval(f, r.model);
            } catch (const Error&) {
                ok = false;
            }
            if (ok) return r;
            std::vector<Formula> eqs;
            for (const auto& v : scope) {
                if (v.sort == Sort::Bool) {
                    Formula b = mk_boolvar(v);
                    eqs.push_back(r.model.get_bool(v.name) ? b : mk_not(b));
                } else {
                    eqs.push_back(mk_atom(Relop::Eq, mk_var(v),
                                          mk_const(r.model.get_rational(v.name), v.sort)));
                }
            }
            assert_formula(mk_not(mk_and(std::move(eqs))));
        }
        return SatResult::unknown("model failed evaluation check repeatedly");
    }

    void reset() {
        while (frames_.size() > 1) pop();
    }

private:
    void start() {
        proc_.spawn(cfg_.path, cfg_.args);
        alive_ = true;
        rxbuf_.clear();
        if (frames_.empty()) {
            frames_.emplace_back();
            frames_.back().push_back("(set-option :print-success true)");
            frames_.back().push_back("(set-option :produce-models true)");
            if (!cfg_.logic.empty()) frames_.back().push_back("(set-logic " + cfg_.logic + ")");
            for (const auto& c : frames_.back()) run_handshake(c);
        } else {
            // replay recorded history
            for (std::size_t i = 0; i < frames_.size(); ++i) {
                if (i > 0) run_handshake("(push 1)");
                for (const auto& c : frames_[i]) run_handshake(c);
            }
        }
    }

    void restart() {
        proc_.terminate();
        alive_ = false;
        start();
    }

    void run_handshake(const std::string& cmd) {
        if (!proc_.write_all(cmd + "\n")) throw SolverError("cannot write to solver");
        auto r = read_unit(Budget(cfg_.command_timeout_s));
        if (!r) throw SolverError("solver did not acknowledge: " + cmd);
        if (r->rfind("(error", 0) == 0) throw SolverError(*r + " for: " + cmd);
    }

    // record + send one stateful command
    void command(const std::string& cmd) {
        frames_.back().push_back(cmd);
        if (!alive_) {
            start();
            return; // replay already sent it
        }
        if (!proc_.write_all(cmd + "\n")) {
            alive_ = false;
            start();
            return;
        }
        auto r = read_unit(Budget(cfg_.command_timeout_s));
        if (!r) {
            restart();
            return;
        }
        if (r->rfind("(error", 0) == 0) throw SolverError(*r + " for: " + cmd);
    }

    bool write_or_revive(const std::string& data) {
        if (!alive_) start();
        if (proc_.write_all(data)) return true;
        alive_ = false;
        start();
        return proc_.write_all(data);
    }

    // one response unit: a bare word or one balanced s-expression
    std::optional<std::string> read_unit(const Budget& budget) {
        Stopwatch watch;
        while (true) {
            if (auto unit = extract_unit()) return unit;
            double left = std::min(budget.remaining_s(),
                                   cfg_.command_timeout_s - watch.elapsed_s());
            if (left <= 0) return std::nullopt;
            auto st = proc_.read_some(rxbuf_, left);
            if (st == Subprocess::ReadStatus::Eof) return std::nullopt;
        }
    }

    std::optional<std::string> extract_unit() {
        std::size_t i = 0;
        while (i < rxbuf_.size() && std::isspace(static_cast<unsigned char>(rxbuf_[i]))) ++i;
        if (i >= rxbuf_.size()) {
            rxbuf_.clear();
            return std::nullopt;
        }
        if (rxbuf_[i] != '(') {
            std::size_t end = rxbuf_.find('\n', i);
            if (end == std::string::npos) return std::nullopt;
            std::string word = rxbuf_.substr(i, end - i);
            while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back())))
                word.pop_back();
            rxbuf_.erase(0, end + 1);
            return word;
        }
        int depth = 0;
        bool in_string = false, in_sym = false;
        for (std::size_t j = i; j < rxbuf_.size(); ++j) {
            char c = rxbuf_[j];
            if (in_string) {
                if (c == '"') in_string = false;
            } else if (in_sym) {
                if (c == '|') in_sym = false;
            } else if (c == '"') {
                in_string = true;
            } else if (c == '|') {
                in_sym = true;
            } else if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (--depth == 0) {
                    std::string unit = rxbuf_.substr(i, j - i + 1);
                    rxbuf_.erase(0, j + 1);
                    return unit;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<Model> fetch_model(const std::vector<Var>& scope, const Budget& budget) {
        std::string q = "(get-value (";
        bool first = true;
        std::set<std::string> seen;
        std::vector<Var> vars;
        for (const auto& v : scope)
            if (seen.insert(v.name).second) vars.push_back(v);
        for (const auto& v : vars) {
            if (!first) q += " ";
            first = false;
            q += v.name;
        }
        q += "))\n";
        if (!proc_.write_all(q)) {
            model_error_ = "solver died during get-value";
            restart();
            return std::nullopt;
        }
        auto unit = read_unit(budget);
        if (!unit) {
            model_error_ = "timeout during get-value";
            restart();
            return std::nullopt;
        }
        try {
            SExprParser p(*unit);
            SExpr e;
            if (!p.next(e) || e.is_atom) throw Error("bad get-value reply");
            std::map<std::string, Sort> sorts;
            for (const auto& v : vars) sorts[v.name] = v.sort;
            Model m;
            for (const auto& pair : e.items) {
                if (pair.is_atom || pair.items.size() != 2 || !pair.items[0].is_atom)
                    throw Error("bad get-value pair");
                auto it = sorts.find(pair.items[0].sym);
                if (it == sorts.end()) throw Error("value for undeclared " + pair.items[0].sym);
                auto val = parse_smt_value(pair.items[1], it->second);
                if (!val) throw Error("unparseable value " + pair.items[1].to_string());
                Var v{pair.items[0].sym, it->second, VarKind::Local};
                m.set(v, std::move(*val));
            }
            for (const auto& v : vars)
                if (!m.contains(v.name)) throw Error("missing value for " + v.name);
            return m;
        } catch (const Error& e) {
            model_error_ = std::string("model parse: ") + e.what();
            return std::nullopt;
        }
    }

    void log_query() {
        if (cfg_.query_log_dir.empty()) return;
        namespace fs = std::filesystem;
        fs::create_directories(cfg_.query_log_dir);
        char name[32];
        std::snprintf(name, sizeof name, "q%05zu.smt2", checks_);
        std::ofstream out(fs::path(cfg_.query_log_dir) / name);
        for (std::size_t i = 0; i < frames_.size(); ++i) {
            if (i > 0) out << "(push 1)\n";
            for (const auto& c : frames_[i]) out << c << "\n";
        }
        out << "(check-sat)\n";
    }

    SolverConfig cfg_;
    Subprocess proc_;
    bool alive_ = false;
    std::vector<std::vector<std::string>> frames_;
    std::string rxbuf_;
    std::string model_error_;
    std::size_t checks_ = 0;
};

} // namespace reacsynth::smt
