#include "dcat/operad.hpp"

#include <algorithm>
#include <numeric>

namespace dcat {

// -- Fin_* -------------------------------------------------------------------

FinStar::PMap FinStar::identity(int n) {
  PMap p{n, n, {}};
  for (int i = 1; i <= n; ++i) p.img.push_back(i);
  return p;
}

FinStar::PMap FinStar::rho(int i, int n) {
  PMap p{n, 1, std::vector<int>(n, 0)};
  p.img[i - 1] = 1;
  return p;
}

FinStar::PMap FinStar::compose(const PMap& g, const PMap& f) {
  DCAT_REQUIRE(f.n == g.m, "pointed maps not composable");
  PMap out{f.m, g.n, {}};
  for (int i = 1; i <= f.m; ++i) {
    int mid = f.img[i - 1];
    out.img.push_back(mid == 0 ? 0 : g.img[mid - 1]);
  }
  return out;
}

bool FinStar::inert(const PMap& f) {
  // every non-basepoint element of the target has a singleton preimage
  std::vector<int> hits(f.n + 1, 0);
  for (int v : f.img) hits[v]++;
  for (int j = 1; j <= f.n; ++j)
    if (hits[j] != 1) return false;
  return true;
}

bool FinStar::active(const PMap& f) {
  for (int v : f.img)
    if (v == 0) return false;
  return true;
}

std::string FinStar::obj_id(int n) { return "<" + std::to_string(n) + ">"; }

std::string FinStar::mor_id(const PMap& f) {
  std::string s = std::to_string(f.m) + ">" + std::to_string(f.n) + ":";
  for (int v : f.img) s += static_cast<char>('0' + v);
  return s;
}

std::vector<FinStar::PMap> FinStar::maps_from(int m) const {
  std::vector<PMap> out;
  for (int n = 0; n <= arity_cap; ++n) {
    PMap cur{m, n, std::vector<int>(m, 0)};
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= n; ++v) {
        cur.img[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::vector<FinStar::PMap> FinStar::all_maps() const {
  std::vector<PMap> out;
  for (int m = 0; m <= arity_cap; ++m)
    for (auto& f : maps_from(m)) out.push_back(f);
  return out;
}

Category FinStar::category() const {
  std::vector<std::string> objects;
  std::vector<Category::Mor> mors;
  std::vector<std::array<std::string, 3>> comp;
  std::map<std::string, std::string> ids;
  for (int n = 0; n <= arity_cap; ++n) objects.push_back(obj_id(n));
  std::vector<PMap> maps = all_maps();
  for (const auto& f : maps) mors.push_back({mor_id(f), f.m, f.n});
  for (int n = 0; n <= arity_cap; ++n) ids[obj_id(n)] = mor_id(identity(n));
  for (const auto& f : maps)
    for (const auto& g : maps)
      if (f.n == g.m) comp.push_back({mor_id(g), mor_id(f), mor_id(compose(g, f))});
  return Category::make(std::move(objects), std::move(mors), comp, ids);
}

// -- colored operads ------------------------------------------------------------

int ColoredOperad::color_index(const std::string& c) const {
  auto it = color_index_.find(c);
  if (it == color_index_.end()) throw InputError("unknown color: " + c);
  return it->second;
}

int ColoredOperad::op_index(const std::string& id) const {
  auto it = op_index_.find(id);
  if (it == op_index_.end()) throw InputError("unknown operation: " + id);
  return it->second;
}

std::vector<int> ColoredOperad::mul(const std::vector<int>& inputs, int output) const {
  std::vector<int> out;
  for (int i = 0; i < op_count(); ++i)
    if (ops_[i].inputs == inputs && ops_[i].output == output) out.push_back(i);
  return out;
}

int ColoredOperad::gamma(int outer, const std::vector<int>& inner) const {
  auto it = gamma_.find({outer, inner});
  if (it == gamma_.end())
    throw InputError("composition table misses gamma(" + ops_[outer].id + "; ...)");
  return it->second;
}

int ColoredOperad::act(int op, const std::vector<int>& perm) const {
  bool trivial = true;
  for (int t = 0; t < static_cast<int>(perm.size()); ++t)
    if (perm[t] != t) trivial = false;
  if (trivial) return op;
  auto it = act_.find({op, perm});
  if (it == act_.end())
    throw InputError("symmetry table misses the action on " + ops_[op].id);
  return it->second;
}

int ColoredOperad::max_arity() const {
  int k = 0;
  for (const auto& o : ops_) k = std::max(k, static_cast<int>(o.inputs.size()));
  return k;
}

void ColoredOperad::validate() const {
  for (int c = 0; c < color_count(); ++c)
    if (ident_[c] < 0)
      throw InputError("no identity operation for color " + colors_[c]);
  // gamma entries respect profiles
  for (const auto& [key, res] : gamma_) {
    const Op& outer = ops_[key.first];
    if (key.second.size() != outer.inputs.size())
      throw InputError("gamma arity mismatch at " + outer.id);
    std::vector<int> profile;
    for (size_t j = 0; j < key.second.size(); ++j) {
      const Op& inner = ops_[key.second[j]];
      if (inner.output != outer.inputs[j])
        throw InputError("gamma color mismatch at " + outer.id);
      profile.insert(profile.end(), inner.inputs.begin(), inner.inputs.end());
    }
    if (ops_[res].inputs != profile || ops_[res].output != outer.output)
      throw InputError("gamma result profile mismatch at " + outer.id);
  }
  // unit laws
  for (int f = 0; f < op_count(); ++f) {
    const Op& op = ops_[f];
    int k = static_cast<int>(op.inputs.size());
    std::vector<int> units;
    for (int c : op.inputs) units.push_back(ident_[c]);
    if (gamma_.count({f, units}) && gamma(f, units) != f)
      throw InputError("right unit law fails at " + op.id);
    if (gamma_.count({ident_[op.output], {f}}) && gamma(ident_[op.output], {f}) != f)
      throw InputError("left unit law fails at " + op.id);
    (void)k;
  }
  // action axioms: identity handled in act(); composition of permutations
  for (const auto& [key, res] : act_) {
    const Op& op = ops_[key.first];
    const auto& perm = key.second;
    if (perm.size() != op.inputs.size()) throw InputError("action arity mismatch at " + op.id);
    std::vector<int> profile(perm.size());
    for (size_t t = 0; t < perm.size(); ++t) profile[t] = op.inputs[perm[t]];
    if (ops_[res].inputs != profile || ops_[res].output != op.output)
      throw InputError("action profile mismatch at " + op.id);
  }
}

ColoredOperad ColoredOperad::make(
    std::vector<std::string> colors, std::vector<Op> ops,
    const std::vector<std::pair<std::pair<std::string, std::vector<std::string>>, std::string>>&
        composition,
    const std::vector<std::tuple<std::string, std::vector<int>, std::string>>& symmetry) {
  ColoredOperad p;
  p.colors_ = std::move(colors);
  for (int i = 0; i < p.color_count(); ++i)
    if (!p.color_index_.emplace(p.colors_[i], i).second)
      throw InputError("duplicate color: " + p.colors_[i]);
  p.ops_ = std::move(ops);
  for (int i = 0; i < p.op_count(); ++i)
    if (!p.op_index_.emplace(p.ops_[i].id, i).second)
      throw InputError("duplicate operation id: " + p.ops_[i].id);
  for (const auto& [lhs, res] : composition) {
    int outer = p.op_index(lhs.first);
    std::vector<int> inner;
    for (const auto& id : lhs.second) inner.push_back(p.op_index(id));
    auto [it, fresh] = p.gamma_.emplace(std::make_pair(outer, inner), p.op_index(res));
    if (!fresh && it->second != p.op_index(res))
      throw InputError("conflicting gamma entries at " + lhs.first);
  }
  for (const auto& [opid, perm, res] : symmetry) {
    auto [it, fresh] =
        p.act_.emplace(std::make_pair(p.op_index(opid), perm), p.op_index(res));
    if (!fresh && it->second != p.op_index(res))
      throw InputError("conflicting symmetry entries at " + opid);
  }
  // derive identities: the unique unary op acting neutrally on both sides
  p.ident_.assign(p.color_count(), -1);
  for (int c = 0; c < p.color_count(); ++c) {
    for (int u : p.mul({c}, c)) {
      bool neutral = true;
      for (int f = 0; f < p.op_count() && neutral; ++f) {
        const Op& op = p.ops_[f];
        if (op.output == c && p.gamma_.count({u, {f}}) && p.gamma_.at({u, {f}}) != f)
          neutral = false;
        std::vector<int> units;
        bool applicable = true;
        for (int ci : op.inputs) {
          if (ci != c) {
            applicable = false;
            break;
          }
          units.push_back(u);
        }
        if (applicable && !op.inputs.empty() && p.gamma_.count({f, units}) &&
            p.gamma_.at({f, units}) != f)
          neutral = false;
      }
      if (neutral) {
        if (p.ident_[c] >= 0)
          throw InputError("ambiguous identity operation for color " + p.colors_[c]);
        p.ident_[c] = u;
      }
    }
  }
  p.validate();
  return p;
}

// -- built-in operads -------------------------------------------------------------

ColoredOperad comm_operad(int max_arity) {
  std::vector<ColoredOperad::Op> ops;
  std::vector<std::pair<std::pair<std::string, std::vector<std::string>>, std::string>> comp;
  std::vector<std::tuple<std::string, std::vector<int>, std::string>> sym;
  auto opname = [](int k) { return "mu" + std::to_string(k); };
  for (int k = 0; k <= max_arity; ++k)
    ops.push_back({opname(k), std::vector<int>(k, 0), 0});
  for (int k = 0; k <= max_arity; ++k) {
    // all composites with total arity within the cap
    std::vector<std::vector<int>> splits;
    std::vector<int> cur(k, 0);
    std::function<void(int, int)> rec = [&](int j, int used) {
      if (j == k) {
        splits.push_back(cur);
        return;
      }
      for (int a = 0; a + used <= max_arity; ++a) {
        cur[j] = a;
        rec(j + 1, used + a);
      }
    };
    rec(0, 0);
    for (const auto& sp : splits) {
      int total = std::accumulate(sp.begin(), sp.end(), 0);
      std::vector<std::string> inner;
      for (int a : sp) inner.push_back(opname(a));
      comp.push_back({{opname(k), inner}, opname(total)});
    }
    // the symmetric action is trivial
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& pm : perms) sym.push_back({opname(k), pm, opname(k)});
  }
  return ColoredOperad::make({"x"}, std::move(ops), comp, sym);
}

ColoredOperad ass_operad(int max_arity) {
  // Mul(k) = orderings of k inputs; an operation is the permutation listing
  // the input slots in multiplication order
  std::vector<ColoredOperad::Op> ops;
  std::vector<std::pair<std::pair<std::string, std::vector<std::string>>, std::string>> comp;
  std::vector<std::tuple<std::string, std::vector<int>, std::string>> sym;
  std::vector<std::vector<std::vector<int>>> perms_by_k(max_arity + 1);
  auto opname = [](const std::vector<int>& order) {
    std::string s = "o" + std::to_string(order.size());
    if (!order.empty()) s += "_";
    for (int v : order) s += static_cast<char>('1' + v);
    return s;
  };
  for (int k = 0; k <= max_arity; ++k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms_by_k[k].push_back(p);
      ops.push_back({opname(p), std::vector<int>(k, 0), 0});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  // gamma: blocks in outer order, within blocks in inner order
  for (int k = 0; k <= max_arity; ++k) {
    for (const auto& outer : perms_by_k[k]) {
      std::vector<int> sizes(k, 0);
      std::function<void(int, int)> rec = [&](int j, int used) {
        if (j == k) {
          // iterate over all tuples of inner orderings with these sizes
          std::vector<int> choice(k, 0);
          std::function<void(int)> pick = [&](int t) {
            if (t == k) {
              std::vector<int> offset(k, 0);
              int acc = 0;
              for (int b = 0; b < k; ++b) {
                offset[b] = acc;
                acc += sizes[b];
              }
              std::vector<int> result;
              for (int t2 = 0; t2 < k; ++t2) {
                int blk = outer[t2];
                for (int s : perms_by_k[sizes[blk]][choice[blk]])
                  result.push_back(offset[blk] + s);
              }
              std::vector<std::string> inner;
              for (int b = 0; b < k; ++b)
                inner.push_back(opname(perms_by_k[sizes[b]][choice[b]]));
              comp.push_back({{opname(outer), inner}, opname(result)});
              return;
            }
            for (size_t c = 0; c < perms_by_k[sizes[t]].size(); ++c) {
              choice[t] = static_cast<int>(c);
              pick(t + 1);
            }
          };
          pick(0);
          return;
        }
        for (int a = 0; a + used <= max_arity; ++a) {
          sizes[j] = a;
          rec(j + 1, used + a);
        }
      };
      rec(0, 0);
    }
  }
  // action: relabel the multiplication order through the permutation
  for (int k = 0; k <= max_arity; ++k) {
    std::vector<int> pm(k);
    std::iota(pm.begin(), pm.end(), 0);
    do {
      std::vector<int> inv(k);
      for (int t = 0; t < k; ++t) inv[pm[t]] = t;
      for (const auto& order : perms_by_k[k]) {
        std::vector<int> relabeled(k);
        for (int pos = 0; pos < k; ++pos) relabeled[pos] = inv[order[pos]];
        sym.push_back({opname(order), pm, opname(relabeled)});
      }
    } while (std::next_permutation(pm.begin(), pm.end()));
  }
  return ColoredOperad::make({"x"}, std::move(ops), comp, sym);
}

ColoredOperad triv_operad(int) {
  std::vector<ColoredOperad::Op> ops{{"id", {0}, 0}};
  return ColoredOperad::make(
      {"x"}, std::move(ops), {{{"id", {"id"}}, "id"}}, {{"id", {0}, "id"}});
}

ColoredOperad idempotent_operad() {
  std::vector<ColoredOperad::Op> ops{{"id", {0}, 0}, {"p", {0}, 0}};
  return ColoredOperad::make({"x"}, std::move(ops),
                             {{{"id", {"id"}}, "id"},
                              {{"id", {"p"}}, "p"},
                              {{"p", {"id"}}, "p"},
                              {{"p", {"p"}}, "p"}},
                             {{"id", {0}, "id"}, {"p", {0}, "p"}});
}

}  // namespace dcat
