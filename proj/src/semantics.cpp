#include <finlogic/semantics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace finlogic {

Program::Program(const Formula & f)
{
    std::map<std::tuple<int, int, int>, int> seen;
    std::map<int, int> var_slot;
    auto emit = [&](auto && self, const Formula & g) -> int {
        Instr in{g->op};
        switch (g->op) {
        case Op::bot: break;
        case Op::var: {
            auto [it, fresh] = var_slot.emplace(g->var, static_cast<int>(vars_.size()));
            if (fresh)
                vars_.push_back(g->var);
            in.a = it->second;
            break;
        }
        case Op::box:
            has_box_ = true;
            in.a = self(self, g->lhs);
            break;
        default:
            in.a = self(self, g->lhs);
            in.b = self(self, g->rhs);
        }
        auto key = std::make_tuple(static_cast<int>(in.op), in.a, in.b);
        auto it = seen.find(key);
        if (it != seen.end())
            return it->second;
        code_.push_back(in);
        return seen[key] = static_cast<int>(code_.size()) - 1;
    };
    emit(emit, f);
}

auto Program::eval_poset(const Poset & p, const Mask * values, bool modal) const -> Mask
{
    Mask all = p.all();
    // x is outside down(S) iff up(x) misses S
    auto outside_down = [&](Mask s) { return all & ~p.down_closure(s); };
    Mask reg[256];
    std::vector<Mask> spill;
    Mask * r = reg;
    if (code_.size() > 256) {
        spill.resize(code_.size());
        r = spill.data();
    }
    for (std::size_t i = 0; i < code_.size(); ++i) {
        auto & in = code_[i];
        switch (in.op) {
        case Op::bot: r[i] = 0; break;
        case Op::var: r[i] = values[in.a]; break;
        case Op::conj: r[i] = r[in.a] & r[in.b]; break;
        case Op::disj: r[i] = r[in.a] | r[in.b]; break;
        case Op::imp:
            r[i] = modal ? (all & (~r[in.a] | r[in.b])) : outside_down(r[in.a] & ~r[in.b]);
            break;
        case Op::box: r[i] = outside_down(all & ~r[in.a]); break;
        }
    }
    return r[code_.size() - 1];
}

auto Program::eval_algebra(const HeytingAlgebra & a, const int * values) const -> int
{
    std::vector<int> r(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
        auto & in = code_[i];
        switch (in.op) {
        case Op::bot: r[i] = a.bottom(); break;
        case Op::var: r[i] = values[in.a]; break;
        case Op::conj: r[i] = a.meet(r[in.a], r[in.b]); break;
        case Op::disj: r[i] = a.join(r[in.a], r[in.b]); break;
        case Op::imp: r[i] = a.imp(r[in.a], r[in.b]); break;
        case Op::box: throw NotIntuitionistic("box has no algebra reading here");
        }
    }
    return r.back();
}

namespace {
    auto gather(const Program & prog, const Poset & p, const Valuation & v, bool need_upsets) -> std::vector<Mask>
    {
        std::vector<Mask> values;
        for (int var : prog.variables()) {
            if (var >= static_cast<int>(v.size()) || ! v[var])
                throw VariableUnassigned("p" + std::to_string(var));
            Mask m = *v[var];
            if ((m & ~p.all()) != 0 || (need_upsets && ! p.is_upset(m)))
                throw InvalidValuation("p" + std::to_string(var) + " is not an upset of the frame");
            values.push_back(m);
        }
        return values;
    }

    auto row_space(std::uint64_t base, std::size_t vars, const char * what) -> std::uint64_t
    {
        double rows = std::pow(static_cast<double>(base), static_cast<double>(vars));
        if (rows > 1e15)
            throw BudgetExceeded(std::string(what) + " valuation space is too large");
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < vars; ++i)
            total *= base;
        return total;
    }
}

auto truth_set(const Poset & p, const Valuation & v, const Formula & f) -> Mask
{
    Program prog(f);
    auto values = gather(prog, p, v, ! prog.has_box());
    return prog.eval_poset(p, values.data(), prog.has_box());
}

auto eval_at(const Poset & p, const Valuation & v, int x, const Formula & f) -> bool
{
    if (! is_intuitionistic(f))
        throw NotIntuitionistic(to_string(f));
    if (x < 0 || x >= p.size())
        throw UnknownElement("point index " + std::to_string(x));
    return (truth_set(p, v, f) >> x) & 1;
}

auto is_valid(const Poset & p, const Formula & f, Budget & budget, Valuation * witness) -> bool
{
    if (! is_intuitionistic(f))
        throw NotIntuitionistic(to_string(f));
    Program prog(f);
    auto ups = upsets(p);
    std::size_t k = prog.variables().size();
    row_space(ups.size(), k, "upset");
    std::vector<std::size_t> at(k, 0);
    std::vector<Mask> values(k, ups.empty() ? 0 : ups[0]);
    Mask all = p.all();
    while (true) {
        budget.charge();
        if (prog.eval_poset(p, values.data(), false) != all) {
            if (witness) {
                witness->assign(64, std::nullopt);
                for (std::size_t i = 0; i < k; ++i)
                    (*witness)[prog.variables()[i]] = values[i];
            }
            return false;
        }
        std::size_t i = 0;
        while (i < k && ++at[i] == ups.size()) {
            at[i] = 0;
            values[i] = ups[0];
            ++i;
        }
        if (i == k)
            return true;
        values[i] = ups[at[i]];
    }
}

auto is_valid_algebra(const HeytingAlgebra & a, const Formula & f, Budget & budget) -> bool
{
    if (! is_intuitionistic(f))
        throw NotIntuitionistic(to_string(f));
    Program prog(f);
    std::size_t k = prog.variables().size();
    row_space(a.size(), k, "algebra");
    std::vector<int> values(k, 0);
    while (true) {
        budget.charge();
        if (prog.eval_algebra(a, values.data()) != a.top())
            return false;
        std::size_t i = 0;
        while (i < k && ++values[i] == a.size()) {
            values[i] = 0;
            ++i;
        }
        if (i == k)
            return true;
    }
}

auto is_valid_modal(const Poset & p, const Formula & f, Budget & budget) -> bool
{
    Program prog(f);
    std::size_t k = prog.variables().size();
    int n = p.size();
    if (n * k >= 63)
        throw BudgetExceeded("modal valuation space is too large");
    std::uint64_t rows = std::uint64_t{1} << (n * k);
    std::vector<Mask> values(k, 0);
    Mask all = p.all();
    for (std::uint64_t row = 0; row < rows; ++row) {
        budget.charge();
        for (std::size_t i = 0; i < k; ++i)
            values[i] = (row >> (i * n)) & all;
        if (prog.eval_poset(p, values.data(), true) != all)
            return false;
    }
    return true;
}

}
