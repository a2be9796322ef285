#include "sumnet/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>
#include <tuple>

#include "sumnet/transfer.hpp"

namespace sumnet {

std::string to_string(Solvability s) {
    switch (s) {
        case Solvability::SolvableWithWitness: return "solvable";
        case Solvability::UnsolvableExhaustive: return "unsolvable-exhaustive";
        case Solvability::UnsolvableStructural: return "unsolvable-structural";
        case Solvability::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

int edge_index(const SumNetwork& net, const std::string& tail, const std::string& head) {
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const auto& ed = net.edge(static_cast<int>(e));
        if (net.name(ed.tail) == tail && net.name(ed.head) == head) return static_cast<int>(e);
    }
    throw InvalidParameter("no edge " + tail + "->" + head);
}

// Flattened network for the search inner loop: per-edge update rules over
// slot indices, edges listed in a topological evaluation order.
struct CompiledNet {
    struct EdgeRule {
        int edge = -1;
        int source_pos = -1;  // >= 0: edge leaves a source
        int source_slot = -1;
        std::vector<std::pair<int, int>> terms;  // (slot, in-edge)
    };
    std::vector<Slot> slots;
    std::vector<EdgeRule> rules;                               // evaluation order
    std::vector<std::vector<std::pair<int, int>>> decode;      // per terminal: (slot, edge)
    std::size_t m = 0;                                         // sources
    std::size_t edges = 0;
};

CompiledNet compile_net(const SumNetwork& net) {
    CompiledNet cn;
    cn.slots = code_slots(net);
    cn.m = net.source_count();
    cn.edges = net.edge_count();
    std::map<std::tuple<int, int, int>, int> slot_of;
    for (std::size_t i = 0; i < cn.slots.size(); ++i)
        slot_of[{static_cast<int>(cn.slots[i].kind), cn.slots[i].a, cn.slots[i].b}] = static_cast<int>(i);
    const auto order = topological_order(net);
    for (int v : order) {
        for (int e : net.out_edges(v)) {
            CompiledNet::EdgeRule rule;
            rule.edge = e;
            if (net.is_source(v)) {
                rule.source_pos = net.source_pos(v);
                rule.source_slot = slot_of.at({static_cast<int>(SlotKind::Source), rule.source_pos, e});
            } else {
                for (int ein : net.in_edges(v))
                    rule.terms.emplace_back(slot_of.at({static_cast<int>(SlotKind::Local), ein, e}), ein);
            }
            cn.rules.push_back(std::move(rule));
        }
    }
    cn.decode.resize(net.terminal_count());
    for (std::size_t i = 0; i < net.terminal_count(); ++i)
        for (int e : net.in_edges(net.terminals()[i]))
            cn.decode[i].emplace_back(slot_of.at({static_cast<int>(SlotKind::Decode), static_cast<int>(i), e}),
                                      e);
    return cn;
}

// Scalar symbolic check: per edge, the coefficient of each source symbol; a
// solution makes every terminal's row all-ones.
bool evaluate_assignment(const CompiledNet& cn, const Fq& f, const std::vector<FqElem>& assign,
                         std::vector<FqElem>& msg) {
    const std::size_t m = cn.m;
    for (const auto& rule : cn.rules) {
        FqElem* out = &msg[static_cast<std::size_t>(rule.edge) * m];
        if (rule.source_pos >= 0) {
            for (std::size_t j = 0; j < m; ++j) out[j] = 0;
            out[static_cast<std::size_t>(rule.source_pos)] = assign[static_cast<std::size_t>(rule.source_slot)];
        } else {
            for (std::size_t j = 0; j < m; ++j) out[j] = 0;
            for (const auto& [slot, ein] : rule.terms) {
                const FqElem c = assign[static_cast<std::size_t>(slot)];
                if (c == 0) continue;
                const FqElem* in = &msg[static_cast<std::size_t>(ein) * m];
                for (std::size_t j = 0; j < m; ++j) out[j] = f.add(out[j], f.mul(c, in[j]));
            }
        }
    }
    for (const auto& terms : cn.decode) {
        for (std::size_t j = 0; j < m; ++j) {
            FqElem acc = 0;
            for (const auto& [slot, e] : terms)
                acc = f.add(acc, f.mul(assign[static_cast<std::size_t>(slot)],
                                       msg[static_cast<std::size_t>(e) * m + j]));
            if (acc != f.one()) return false;
        }
    }
    return true;
}

// Slots pinned to 1 under the wlog reduction: all source-edge coefficients,
// and local coefficients at vertices with a single in-edge (pure relays).
std::vector<char> wlog_fixed_mask(const SumNetwork& net, const std::vector<Slot>& slots) {
    std::vector<char> fixed(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& s = slots[i];
        if (s.kind == SlotKind::Source) fixed[i] = 1;
        if (s.kind == SlotKind::Local && net.in_edges(net.edge(s.b).tail).size() == 1) fixed[i] = 1;
    }
    return fixed;
}

std::uint64_t pow_saturating(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

struct WorkerResult {
    std::uint64_t scanned = 0;
    std::uint64_t found = 0;
    std::uint64_t first_index = UINT64_MAX;
    std::vector<std::pair<std::uint64_t, std::vector<FqElem>>> kept;
};

// Scans assignment indices [lo, hi); free-slot digits in lexicographic order,
// first free slot most significant.
WorkerResult scan_range(const CompiledNet& cn, const Fq& f, const std::vector<FqElem>& base_assign,
                        const std::vector<int>& free_slots, std::uint64_t lo, std::uint64_t hi,
                        bool find_all, std::size_t keep_cap) {
    WorkerResult res;
    const std::size_t nfree = free_slots.size();
    const std::uint64_t q = f.order();
    std::vector<FqElem> assign = base_assign;
    std::vector<std::uint32_t> digits(nfree, 0);
    std::uint64_t rem = lo;
    for (std::size_t i = nfree; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rem % q);
        rem /= q;
    }
    for (std::size_t i = 0; i < nfree; ++i) assign[static_cast<std::size_t>(free_slots[i])] = digits[i];
    std::vector<FqElem> msg(cn.edges * cn.m, 0);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        ++res.scanned;
        if (evaluate_assignment(cn, f, assign, msg)) {
            ++res.found;
            if (res.first_index == UINT64_MAX) res.first_index = idx;
            if (find_all && res.kept.size() < keep_cap) res.kept.emplace_back(idx, assign);
            if (!find_all) break;
        }
        // odometer step, last free slot fastest
        for (std::size_t i = nfree; i-- > 0;) {
            if (++digits[i] < q) {
                assign[static_cast<std::size_t>(free_slots[i])] = digits[i];
                break;
            }
            digits[i] = 0;
            assign[static_cast<std::size_t>(free_slots[i])] = 0;
        }
    }
    return res;
}

LinearCode assignment_to_code(const SumNetwork& net, const FieldPtr& field,
                              const std::vector<Slot>& slots, const std::vector<FqElem>& assign) {
    std::vector<Matrix> mats;
    mats.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) mats.push_back(Matrix::from_element(field, assign[i]));
    return code_from_assignment(net, field, 1, mats);
}

}  // namespace

std::uint64_t brute_force_space(const SumNetwork& net, const FieldPtr& field, bool wlog_reduce) {
    const auto slots = code_slots(net);
    std::size_t free_count = slots.size();
    if (wlog_reduce) {
        const auto fixed = wlog_fixed_mask(net, slots);
        free_count = 0;
        for (char c : fixed)
            if (!c) ++free_count;
    }
    return pow_saturating(field->order(), free_count);
}

SolvabilityVerdict brute_force_scalar(const SumNetwork& net, const FieldPtr& field,
                                      const BruteForceOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const CompiledNet cn = compile_net(net);
    std::vector<char> fixed(cn.slots.size(), 0);
    if (opts.wlog_reduce) fixed = wlog_fixed_mask(net, cn.slots);
    std::vector<FqElem> base_assign(cn.slots.size(), 0);
    std::vector<int> free_slots;
    for (std::size_t i = 0; i < cn.slots.size(); ++i) {
        if (fixed[i])
            base_assign[i] = field->one();
        else
            free_slots.push_back(static_cast<int>(i));
    }
    const std::uint64_t space = pow_saturating(field->order(), free_slots.size());
    if (space > opts.limit)
        throw SearchSpaceTooLarge("search space of " + std::to_string(space) + " assignments exceeds limit " +
                                      std::to_string(opts.limit) + " (" + std::to_string(free_slots.size()) +
                                      " free slots over " + field->label() + ")",
                                  static_cast<double>(space));

    const unsigned workers = std::max(1u, opts.workers);
    std::vector<WorkerResult> results(workers);
    if (workers == 1 || space < 2 * workers) {
        results[0] = scan_range(cn, *field, base_assign, free_slots, 0, space, opts.find_all, opts.witness_cap);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = space / workers * w + std::min<std::uint64_t>(w, space % workers);
            const std::uint64_t len = space / workers + (w < space % workers ? 1 : 0);
            threads.emplace_back([&, w, lo, len] {
                results[w] = scan_range(cn, *field, base_assign, free_slots, lo, lo + len, opts.find_all,
                                        opts.witness_cap);
            });
        }
        for (auto& t : threads) t.join();
    }

    SolvabilityVerdict verdict;
    verdict.network_id = network_id(net);
    verdict.field_spec = field->spec_string();
    verdict.block_len = 1;
    std::uint64_t first = UINT64_MAX;
    std::vector<std::pair<std::uint64_t, std::vector<FqElem>>> kept;
    for (const auto& r : results) {
        verdict.stats.assignments_tried += r.scanned;
        verdict.stats.solutions_found += r.found;
        first = std::min(first, r.first_index);
        kept.insert(kept.end(), r.kept.begin(), r.kept.end());
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (kept.size() > opts.witness_cap) kept.resize(opts.witness_cap);

    if (first != UINT64_MAX) {
        // rebuild the first witness from its index
        std::vector<FqElem> assign = base_assign;
        std::uint64_t rem = first;
        for (std::size_t i = free_slots.size(); i-- > 0;) {
            assign[static_cast<std::size_t>(free_slots[i])] = static_cast<FqElem>(rem % field->order());
            rem /= field->order();
        }
        LinearCode code = assignment_to_code(net, field, cn.slots, assign);
        if (!is_solution(net, code)) throw Error("internal: brute-force witness failed verification");
        verdict.status = Solvability::SolvableWithWitness;
        verdict.witness = std::move(code);
        verdict.evidence = "witness found at assignment index " + std::to_string(first) + " of " +
                           std::to_string(space);
        for (const auto& [idx, a] : kept) verdict.witnesses.push_back(assignment_to_code(net, field, cn.slots, a));
    } else {
        verdict.status = Solvability::UnsolvableExhaustive;
        verdict.evidence = "exhausted all " + std::to_string(space) + " assignments" +
                           (opts.wlog_reduce ? " (source/relay coefficients pinned to 1)" : "") +
                           ", no solution";
    }
    verdict.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

LinearCode smstar_structured_code(int m, const FieldPtr& field, int block_len) {
    if (m < 3) throw InvalidParameter("smstar requires m >= 3");
    if (block_len < 1) throw InvalidParameter("block length must be >= 1");
    if (field->char_divides(m - 2))
        throw CharacteristicDividesM2("characteristic " + std::to_string(field->characteristic()) +
                                          " divides m-2 = " + std::to_string(m - 2),
                                      field->characteristic(), m - 2);
    const SumNetwork net = gen_smstar(m);
    const std::size_t n = static_cast<std::size_t>(block_len);
    const Matrix ident = Matrix::identity(field, n);
    const Matrix last_row = Matrix::scalar(field, n, field->inv(field->from_int(m - 2)));
    const int last_terminal = m - 1;  // position of t_m
    LinearCode code;
    code.field = field;
    code.block_len = block_len;
    for (const Slot& s : code_slots(net))
        code.set(s.kind, s.a, s.b, s.kind == SlotKind::Decode && s.a == last_terminal ? last_row : ident);
    if (!is_solution(net, code)) throw Error("internal: structured code failed verification");
    return code;
}

bool g1_condition_check(const FieldPtr& field, FqElem alpha, FqElem beta, FqElem gamma) {
    if (alpha == 0 || beta == 0 || gamma == 0)
        throw ZeroCoefficient("combining coefficients must be non-zero");
    const Fq& f = *field;
    return f.add(beta, f.inv(gamma)) == f.one() && f.add(gamma, f.inv(alpha)) == f.one() &&
           f.add(alpha, f.inv(beta)) == f.one();
}

LinearCode g1_code_from_triple(const FieldPtr& field, FqElem alpha, FqElem beta, FqElem gamma) {
    if (alpha == 0 || beta == 0 || gamma == 0)
        throw ZeroCoefficient("combining coefficients must be non-zero");
    const SumNetwork net = gen_g1();
    LinearCode code;
    code.field = field;
    code.block_len = 1;
    const FqElem one = field->one();
    for (std::size_t j = 0; j < net.source_count(); ++j)
        for (int e : net.out_edges(net.sources()[j])) code.set_scalar(SlotKind::Source, static_cast<int>(j), e, one);
    const auto uv = [&](int i) { return edge_index(net, "u" + std::to_string(i), "v" + std::to_string(i)); };
    const auto su = [&](int i, int j) {
        return edge_index(net, "s" + std::to_string(i), "u" + std::to_string(j));
    };
    const auto vt = [&](int i, int j) {
        return edge_index(net, "v" + std::to_string(i), "t" + std::to_string(j));
    };
    code.set_scalar(SlotKind::Local, su(2, 1), uv(1), one);
    code.set_scalar(SlotKind::Local, su(3, 1), uv(1), alpha);
    code.set_scalar(SlotKind::Local, su(3, 2), uv(2), one);
    code.set_scalar(SlotKind::Local, su(1, 2), uv(2), beta);
    code.set_scalar(SlotKind::Local, su(1, 3), uv(3), one);
    code.set_scalar(SlotKind::Local, su(2, 3), uv(3), gamma);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) code.set_scalar(SlotKind::Local, uv(i), vt(i, j), one);
    code.set_scalar(SlotKind::Decode, 0, vt(2, 1), one);
    code.set_scalar(SlotKind::Decode, 0, vt(3, 1), field->inv(gamma));
    code.set_scalar(SlotKind::Decode, 1, vt(3, 2), one);
    code.set_scalar(SlotKind::Decode, 1, vt(1, 2), field->inv(alpha));
    code.set_scalar(SlotKind::Decode, 2, vt(1, 3), one);
    code.set_scalar(SlotKind::Decode, 2, vt(2, 3), field->inv(beta));
    return code;
}

LinearCode g1_structured_code(const FieldPtr& field, FqElem alpha) {
    if (field->order() == 2)
        throw FieldTooSmall("over GF(2) all combining coefficients are forced to 1, and the solvability "
                            "conditions then read 1 = 0");
    if (alpha == field->zero() || alpha == field->one())
        throw InvalidAlpha("alpha must lie outside {0, 1}");
    const FqElem gamma = field->sub(field->one(), field->inv(alpha));
    const FqElem beta = field->inv(field->sub(field->one(), alpha));
    LinearCode code = g1_code_from_triple(field, alpha, beta, gamma);
    if (!g1_condition_check(field, alpha, beta, gamma) || !is_solution(gen_g1(), code))
        throw Error("internal: g1 structured code failed verification");
    return code;
}

LinearCode lift_scalar_to_vector(const SumNetwork& net, const LinearCode& scalar_code) {
    if (scalar_code.block_len != 1) throw InvalidParameter("lift expects a scalar (N = 1) code");
    if (!is_solution(net, scalar_code)) throw InputNotSolving("input code does not solve the network");
    const FieldPtr ext = scalar_code.field;
    const FieldPtr base = Fq::make(ext->characteristic(), 1);
    LinearCode lifted;
    lifted.field = base;
    lifted.block_len = static_cast<int>(ext->degree());
    const auto lift_map = [&](const std::map<std::pair<int, int>, Matrix>& src,
                              std::map<std::pair<int, int>, Matrix>& dst) {
        for (const auto& [k, v] : src) dst.emplace(k, lift_to_matrix(ext, v.at(0, 0), base));
    };
    lift_map(scalar_code.source, lifted.source);
    lift_map(scalar_code.local, lifted.local);
    lift_map(scalar_code.decode, lifted.decode);
    if (!is_solution(net, lifted)) throw Error("internal: lifted code failed verification");
    return lifted;
}

std::vector<SolvabilityVerdict> characteristic_set_probe(int m, const std::vector<FieldPtr>& fields,
                                                         const ProbeOptions& opts) {
    const SumNetwork net = gen_smstar(m);
    std::vector<SolvabilityVerdict> table;
    for (const auto& field : fields) {
        SolvabilityVerdict v;
        v.network_id = network_id(net);
        v.field_spec = field->spec_string();
        v.block_len = 1;
        try {
            LinearCode code = smstar_structured_code(m, field, 1);
            v.status = Solvability::SolvableWithWitness;
            v.witness = std::move(code);
            v.evidence = "characteristic " + std::to_string(field->characteristic()) +
                         " does not divide m-2 = " + std::to_string(m - 2) + "; structured code verified";
        } catch (const CharacteristicDividesM2& e) {
            v.status = Solvability::UnsolvableStructural;
            v.evidence = e.what();
        }
        if (brute_force_space(net, field, true) <= opts.brute_cross_check_limit) {
            BruteForceOptions bo;
            bo.wlog_reduce = true;
            bo.limit = opts.limit;
            const SolvabilityVerdict bv = brute_force_scalar(net, field, bo);
            if (bv.solvable() != v.solvable())
                throw Error("structured and brute-force verdicts disagree on " + v.network_id + " over " +
                            field->label());
            v.stats = bv.stats;
            v.evidence += "; brute force agrees after " + std::to_string(bv.stats.assignments_tried) +
                          " assignments";
        }
        table.push_back(std::move(v));
    }
    return table;
}

SolvabilityVerdict solve(const SumNetwork& net, const FieldPtr& field, const SolveOptions& opts) {
    SolvabilityVerdict v;
    v.network_id = network_id(net);
    v.field_spec = field->spec_string();
    v.block_len = opts.block_len;
    if (opts.block_len < 1) throw InvalidParameter("block length must be >= 1");

    const auto structured = [&]() -> std::optional<SolvabilityVerdict> {
        if (const auto m = recognize_smstar(net)) {
            try {
                LinearCode code = smstar_structured_code(*m, field, opts.block_len);
                v.status = Solvability::SolvableWithWitness;
                v.witness = std::move(code);
                v.evidence = "structured code: characteristic does not divide m-2 = " + std::to_string(*m - 2);
            } catch (const CharacteristicDividesM2& e) {
                v.status = Solvability::UnsolvableStructural;
                v.evidence = std::string(e.what()) + "; unsolvable at every block length";
            }
            return v;
        }
        if (recognize_g1(net)) {
            if (opts.block_len == 1) {
                if (field->order() == 2) {
                    v.status = Solvability::UnsolvableStructural;
                    v.evidence = "no scalar solution over GF(2): forced unit coefficients require 1 = 0";
                } else {
                    v.status = Solvability::SolvableWithWitness;
                    v.witness = g1_structured_code(field, 2);  // smallest element outside {0,1}
                    v.evidence = "structured code with alpha = " + field->render(2);
                }
                return v;
            }
            if (field->degree() == 1) {
                const FieldPtr ext = Fq::make(field->characteristic(), static_cast<std::uint32_t>(opts.block_len));
                LinearCode scalar = g1_structured_code(ext, 2);
                v.status = Solvability::SolvableWithWitness;
                v.witness = lift_scalar_to_vector(net, scalar);
                v.evidence = "scalar solution over " + ext->label() + " lifted to a " +
                             std::to_string(opts.block_len) + "-length vector code";
                return v;
            }
        }
        return std::nullopt;
    };

    if (opts.mode == SolveMode::Structured || opts.mode == SolveMode::Auto) {
        if (auto sv = structured()) return *sv;
        if (opts.mode == SolveMode::Structured) {
            v.status = Solvability::Unknown;
            v.evidence = "no structured construction recognizes this network";
            return v;
        }
    }
    if (opts.block_len != 1) {
        v.status = Solvability::Unknown;
        v.evidence = "vector-code exhaustive search is not attempted; no structured route applies";
        return v;
    }
    try {
        BruteForceOptions bo;
        bo.wlog_reduce = opts.wlog_reduce;
        bo.limit = opts.limit;
        bo.workers = opts.workers;
        return brute_force_scalar(net, field, bo);
    } catch (const SearchSpaceTooLarge& e) {
        v.status = Solvability::Unknown;
        v.evidence = e.what();
        return v;
    }
}

}  // namespace sumnet
