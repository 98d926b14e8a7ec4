#include "dcat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dcat {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered ref_json(const SSet& s, const SimplexRef& r) {
  ordered o;
  o["degens"] = r.degens;
  o["base"] = s.name(r.base);
  return o;
}

SSetBuilder::FaceSpec ref_spec(const json& j) {
  SSetBuilder::FaceSpec spec;
  if (!j.is_object() || !j.contains("degens") || !j.contains("base"))
    throw InputError("face ref needs \"degens\" and \"base\"");
  spec.degens = j.at("degens").get<std::vector<int>>();
  spec.base = j.at("base").get<std::string>();
  return spec;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

}  // namespace

std::string write_ssx(const SSet& s) {
  ordered root;
  ordered dims = ordered::object();
  for (Dim n = 0; n <= s.top_dim(); ++n) {
    ordered row = ordered::array();
    for (int i = 0; i < s.count(n); ++i) row.push_back(s.name(n, i));
    dims[std::to_string(n)] = std::move(row);
  }
  root["dims"] = std::move(dims);
  ordered faces = ordered::object();
  for (Dim n = 1; n <= s.top_dim(); ++n)
    for (int i = 0; i < s.count(n); ++i) {
      ordered row = ordered::array();
      for (int k = 0; k <= n; ++k) row.push_back(ref_json(s, s.base_face(SimplexId{n, i}, k)));
      faces[s.name(n, i)] = std::move(row);
    }
  root["faces"] = std::move(faces);
  if (!s.labels().empty()) {
    ordered labels = ordered::object();
    for (const auto& [k, v] : s.labels()) labels[k] = v;
    root["labels"] = std::move(labels);
  }
  return root.dump(2) + "\n";
}

SSetPtr read_ssx(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("dims") || !j.contains("faces"))
    throw InputError("SSX needs top-level \"dims\" and \"faces\"");
  SSetBuilder b;
  std::vector<std::pair<Dim, std::string>> order;
  for (const auto& [key, row] : j.at("dims").items()) {
    Dim n;
    try {
      n = std::stoi(key);
    } catch (...) {
      throw InputError("SSX dimension keys must be integers");
    }
    for (const auto& id : row) order.push_back({n, id.get<std::string>()});
  }
  std::sort(order.begin(), order.end());
  const json& faces = j.at("faces");
  for (const auto& [n, id] : order) {
    std::vector<SSetBuilder::FaceSpec> fs;
    if (n >= 1) {
      if (!faces.contains(id)) throw InputError("missing faces for " + id);
      for (const auto& f : faces.at(id)) fs.push_back(ref_spec(f));
    }
    b.add(n, id, std::move(fs));
  }
  if (j.contains("labels"))
    for (const auto& [k, v] : j.at("labels").items()) b.label(k, v.get<std::string>());
  return b.build();
}

std::string write_cat(const Category& c) {
  ordered root;
  ordered objs = ordered::array();
  for (int i = 0; i < c.object_count(); ++i) objs.push_back(c.object(i));
  root["objects"] = std::move(objs);
  ordered mors = ordered::array();
  for (int i = 0; i < c.mor_count(); ++i) {
    ordered m;
    m["id"] = c.mor(i).id;
    m["src"] = c.object(c.mor(i).src);
    m["dst"] = c.object(c.mor(i).dst);
    mors.push_back(std::move(m));
  }
  root["morphisms"] = std::move(mors);
  ordered comp = ordered::array();
  for (int g = 0; g < c.mor_count(); ++g)
    for (int f = 0; f < c.mor_count(); ++f) {
      if (c.mor(f).dst != c.mor(g).src) continue;
      if (c.is_identity(f) || c.is_identity(g)) continue;
      comp.push_back(ordered::array(
          {c.mor(g).id, c.mor(f).id, c.mor(c.compose(g, f)).id}));
    }
  root["compose"] = std::move(comp);
  ordered ids = ordered::object();
  for (int o = 0; o < c.object_count(); ++o)
    ids[c.object(o)] = c.mor(c.identity_of(o)).id;
  root["identities"] = std::move(ids);
  return root.dump(2) + "\n";
}

Category read_cat(const std::string& text) {
  json j = parse(text);
  for (const char* key : {"objects", "morphisms", "compose", "identities"})
    if (!j.contains(key)) throw InputError(std::string("CAT needs \"") + key + "\"");
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  std::map<std::string, int> obj_index;
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) obj_index[objects[i]] = i;
  std::vector<Category::Mor> mors;
  for (const auto& m : j.at("morphisms")) {
    auto src = obj_index.find(m.at("src").get<std::string>());
    auto dst = obj_index.find(m.at("dst").get<std::string>());
    if (src == obj_index.end() || dst == obj_index.end())
      throw InputError("morphism references an unknown object");
    mors.push_back({m.at("id").get<std::string>(), src->second, dst->second});
  }
  std::vector<std::array<std::string, 3>> comp;
  for (const auto& e : j.at("compose")) {
    if (!e.is_array() || e.size() != 3) throw InputError("compose entries are triples");
    comp.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
  }
  std::map<std::string, std::string> ids;
  for (const auto& [k, v] : j.at("identities").items()) ids[k] = v.get<std::string>();
  return Category::make(std::move(objects), std::move(mors), comp, ids);
}

std::string write_opd(const ColoredOperad& p) {
  ordered root;
  ordered colors = ordered::array();
  for (int c = 0; c < p.color_count(); ++c) colors.push_back(p.color(c));
  root["colors"] = std::move(colors);
  ordered ops = ordered::array();
  for (int i = 0; i < p.op_count(); ++i) {
    ordered o;
    o["id"] = p.op(i).id;
    ordered ins = ordered::array();
    for (int c : p.op(i).inputs) ins.push_back(p.color(c));
    o["inputs"] = std::move(ins);
    o["output"] = p.color(p.op(i).output);
    ops.push_back(std::move(o));
  }
  root["operations"] = std::move(ops);
  // regenerate the full tables deterministically
  ordered comp = ordered::array();
  for (int f = 0; f < p.op_count(); ++f) {
    int k = static_cast<int>(p.op(f).inputs.size());
    std::vector<int> choice(k, 0);
    std::vector<std::vector<int>> cands(k);
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < p.op_count(); ++g)
        if (p.op(g).output == p.op(f).inputs[j]) cands[j].push_back(g);
    std::function<void(int)> rec = [&](int j) {
      if (j == k) {
        std::vector<int> inner(k);
        for (int t = 0; t < k; ++t) inner[t] = cands[t][choice[t]];
        try {
          int res = p.gamma(f, inner);
          ordered entry;
          entry["outer"] = p.op(f).id;
          ordered in = ordered::array();
          for (int g : inner) in.push_back(p.op(g).id);
          entry["inner"] = std::move(in);
          entry["result"] = p.op(res).id;
          comp.push_back(std::move(entry));
        } catch (const InputError&) {
          // composite exceeds the arity cap; the truncated table omits it
        }
        return;
      }
      for (size_t c = 0; c < cands[j].size(); ++c) {
        choice[j] = static_cast<int>(c);
        rec(j + 1);
      }
    };
    rec(0);
  }
  root["composition"] = std::move(comp);
  ordered sym = ordered::array();
  for (int f = 0; f < p.op_count(); ++f) {
    int k = static_cast<int>(p.op(f).inputs.size());
    std::vector<int> perm(k);
    for (int t = 0; t < k; ++t) perm[t] = t;
    do {
      ordered entry;
      entry["op"] = p.op(f).id;
      entry["perm"] = perm;
      entry["result"] = p.op(p.act(f, perm)).id;
      sym.push_back(std::move(entry));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  root["symmetry"] = std::move(sym);
  return root.dump(2) + "\n";
}

ColoredOperad read_opd(const std::string& text) {
  json j = parse(text);
  for (const char* key : {"colors", "operations", "composition", "symmetry"})
    if (!j.contains(key)) throw InputError(std::string("OPD needs \"") + key + "\"");
  std::vector<std::string> colors = j.at("colors").get<std::vector<std::string>>();
  std::map<std::string, int> color_index;
  for (int i = 0; i < static_cast<int>(colors.size()); ++i) color_index[colors[i]] = i;
  std::vector<ColoredOperad::Op> ops;
  for (const auto& o : j.at("operations")) {
    ColoredOperad::Op op;
    op.id = o.at("id").get<std::string>();
    for (const auto& c : o.at("inputs")) {
      auto it = color_index.find(c.get<std::string>());
      if (it == color_index.end()) throw InputError("operation uses an unknown color");
      op.inputs.push_back(it->second);
    }
    auto it = color_index.find(o.at("output").get<std::string>());
    if (it == color_index.end()) throw InputError("operation uses an unknown color");
    op.output = it->second;
    ops.push_back(std::move(op));
  }
  std::vector<std::pair<std::pair<std::string, std::vector<std::string>>, std::string>> comp;
  for (const auto& e : j.at("composition"))
    comp.push_back({{e.at("outer").get<std::string>(),
                     e.at("inner").get<std::vector<std::string>>()},
                    e.at("result").get<std::string>()});
  std::vector<std::tuple<std::string, std::vector<int>, std::string>> sym;
  for (const auto& e : j.at("symmetry"))
    sym.push_back({e.at("op").get<std::string>(), e.at("perm").get<std::vector<int>>(),
                   e.at("result").get<std::string>()});
  return ColoredOperad::make(std::move(colors), std::move(ops), comp, sym);
}

std::string write_smap(const SMap& m) {
  ordered root;
  ordered assign = ordered::object();
  const SSet& src = *m.src();
  for (Dim n = 0; n <= src.top_dim(); ++n)
    for (int i = 0; i < src.count(n); ++i)
      assign[src.name(n, i)] = ref_json(*m.dst(), m.at(SimplexId{n, i}));
  root["assign"] = std::move(assign);
  return root.dump(2) + "\n";
}

SMap read_smap(const std::string& text, const SSetPtr& src, const SSetPtr& dst) {
  json j = parse(text);
  if (!j.contains("assign")) throw InputError("SMAP needs \"assign\"");
  const json& assign = j.at("assign");
  SMap m = make_map(src, dst, [&](SimplexId id) {
    const std::string& nm = src->name(id);
    if (!assign.contains(nm)) throw InputError("SMAP misses an assignment for " + nm);
    SSetBuilder::FaceSpec spec = ref_spec(assign.at(nm));
    return SimplexRef{spec.degens, dst->require(spec.base)};
  });
  std::string err;
  if (!m.validate(&err)) throw InputError("SMAP is not simplicial: " + err);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace dcat
