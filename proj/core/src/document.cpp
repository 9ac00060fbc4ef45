#include "fugue/document.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fugue {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error_at(const std::string& text, size_t byte,
                                 const std::string& msg) {
  int line = 1, col = 1;
  for (size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(line, col, "syntax error at " + std::to_string(line) + ":" +
                                  std::to_string(col) + ": " + msg);
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw MalformedInputError("document: missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw MalformedInputError("document: expected a string for " + std::string(what));
  }
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw MalformedInputError("document: expected an array for " + std::string(what));
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(str(x, what));
  return out;
}

FinSet finset(const Json& j, const std::string& name, const char* what) {
  return FinSet(name, string_list(j, what));
}

std::string doc_name(const Json& j) {
  auto it = j.find("name");
  return it != j.end() && it->is_string() ? it->get<std::string>() : std::string();
}

/// Named definitions visible to references inside one file (and, through
/// load_document, its imports).
struct DocContext {
  std::map<std::string, Json> defs;

  const Json& resolve(const std::string& name) const {
    auto it = defs.find(name);
    if (it == defs.end()) {
      throw UnresolvedReference("unresolved reference '" + name + "'");
    }
    return it->second;
  }
  /// Inline object, or a string naming a def.
  const Json& deref(const Json& j, int depth = 0) const {
    if (depth > 16) throw UnresolvedReference("reference chain too deep");
    if (j.is_string()) return deref(resolve(j.get<std::string>()), depth + 1);
    return j;
  }
};

using Triple = std::tuple<std::string, std::string, std::string>;

std::vector<Triple> triples(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw MalformedInputError("document: expected an array of triples for " +
                              std::string(what));
  }
  std::vector<Triple> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3) {
      throw MalformedInputError("document: each entry of " + std::string(what) +
                                " must be a [x, y, z] triple");
    }
    out.emplace_back(str(row[0], what), str(row[1], what), str(row[2], what));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw MalformedInputError("document: expected an array of pairs for " +
                              std::string(what));
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2) {
      throw MalformedInputError("document: each entry of " + std::string(what) +
                                " must be a [x, y] pair");
    }
    out.emplace_back(str(row[0], what), str(row[1], what));
  }
  return out;
}

MealyMachine parse_mealy(const Json& j) {
  FinSet states = finset(field(j, "states"), "states", "states");
  FinSet input = finset(field(j, "input"), "input", "input");
  FinSet output = finset(field(j, "output"), "output", "output");
  return MealyMachine::from_labels(doc_name(j), std::move(states), std::move(input),
                                   std::move(output), triples(field(j, "d"), "d"),
                                   triples(field(j, "s"), "s"));
}

PowersetMealy parse_powerset_mealy(const Json& j) {
  FinSet states = finset(field(j, "states"), "states", "states");
  FinSet input = finset(field(j, "input"), "input", "input");
  FinSet output = finset(field(j, "output"), "output", "output");
  auto subset_table = [&](const Json& t, const FinSet& cod, const char* what) {
    std::vector<std::vector<int>> table(
        static_cast<size_t>(states.size()) * static_cast<size_t>(input.size()));
    std::vector<char> seen(table.size(), 0);
    if (!t.is_array()) {
      throw MalformedInputError("document: expected an array for " + std::string(what));
    }
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != 3 || !row[2].is_array()) {
        throw MalformedInputError("document: each entry of " + std::string(what) +
                                  " must be [state, letter, [elements]]");
      }
      size_t slot =
          static_cast<size_t>(states.index(str(row[0], what))) *
              static_cast<size_t>(input.size()) +
          static_cast<size_t>(input.index(str(row[1], what)));
      if (seen[slot]) {
        throw MalformedInputError("document: duplicate " + std::string(what) + " entry");
      }
      seen[slot] = 1;
      std::vector<int> sub;
      for (const auto& x : row[2]) sub.push_back(cod.index(str(x, what)));
      std::sort(sub.begin(), sub.end());
      sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
      table[slot] = std::move(sub);
    }
    for (char s : seen) {
      if (!s) {
        throw MalformedInputError("document: " + std::string(what) +
                                  " table is not total");
      }
    }
    return table;
  };
  auto d = subset_table(field(j, "d"), states, "d");
  auto s = subset_table(field(j, "s"), output, "s");
  return PowersetMealy(doc_name(j), std::move(states), std::move(input), std::move(output),
                       std::move(d), std::move(s));
}

MooreMachine parse_moore(const Json& j) {
  FinSet states = finset(field(j, "states"), "states", "states");
  FinSet input = finset(field(j, "input"), "input", "input");
  FinSet output = finset(field(j, "output"), "output", "output");
  std::vector<int> d(static_cast<size_t>(states.size()) * static_cast<size_t>(input.size()),
                     -1);
  for (const auto& [e, a, v] : triples(field(j, "d"), "d")) {
    d[static_cast<size_t>(states.index(e)) * static_cast<size_t>(input.size()) +
      static_cast<size_t>(input.index(a))] = states.index(v);
  }
  for (int v : d) {
    if (v < 0) throw MalformedInputError("document: moore d table is not total");
  }
  std::vector<int> s(static_cast<size_t>(states.size()), -1);
  for (const auto& [e, v] : pairs(field(j, "s"), "s")) {
    s[static_cast<size_t>(states.index(e))] = output.index(v);
  }
  for (int v : s) {
    if (v < 0) throw MalformedInputError("document: moore s table is not total");
  }
  return MooreMachine(doc_name(j), std::move(states), std::move(input), std::move(output),
                      std::move(d), std::move(s));
}

FinMonoid parse_monoid(const Json& j) {
  FinSet carrier = finset(field(j, "carrier"), "carrier", "carrier");
  FinMonoid m(doc_name(j), std::move(carrier), str(field(j, "unit"), "unit"),
              triples(field(j, "mul"), "mul"));
  MonoidLawReport laws = check_monoid_laws(m);
  if (!laws.ok) {
    throw InvariantViolation("monoid '" + m.name() + "': " + laws.detail);
  }
  return m;
}

MonoidDesc parse_monoid_desc(const Json& j, const DocContext& ctx) {
  const Json& v = ctx.deref(j);
  if (v.is_object() && v.contains("free")) {
    return MonoidDesc(FreeMonoidHandle{finset(field(v, "free"), "free", "generators")});
  }
  return MonoidDesc(parse_monoid(v));
}

MonoidMealyMachine parse_monoid_machine(const Json& j, const DocContext& ctx) {
  FinSet states = finset(field(j, "states"), "states", "states");
  MonoidDesc input = parse_monoid_desc(field(j, "input"), ctx);
  MonoidDesc output = parse_monoid_desc(field(j, "output"), ctx);
  const FinSet& syms = input.symbols();
  size_t n = static_cast<size_t>(states.size()) * static_cast<size_t>(syms.size());
  std::vector<int> d(n, -1);
  std::vector<MonVal> s(n);
  std::vector<char> sSeen(n, 0);
  for (const auto& [e, sym, v] : triples(field(j, "d"), "d")) {
    d[static_cast<size_t>(states.index(e)) * static_cast<size_t>(syms.size()) +
      static_cast<size_t>(syms.index(sym))] = states.index(v);
  }
  for (int v : d) {
    if (v < 0) throw MalformedInputError("document: monoid-machine d table is not total");
  }
  const Json& sj = field(j, "s");
  if (!sj.is_array()) throw MalformedInputError("document: expected an array for s");
  for (const auto& row : sj) {
    if (!row.is_array() || row.size() != 3) {
      throw MalformedInputError("document: each s entry must be [state, symbol, value]");
    }
    size_t slot = static_cast<size_t>(states.index(str(row[0], "s"))) *
                      static_cast<size_t>(syms.size()) +
                  static_cast<size_t>(syms.index(str(row[1], "s")));
    MonVal val;
    if (row[2].is_array()) {
      if (!output.is_free()) {
        throw MalformedInputError("document: word-valued s entry needs a free output monoid");
      }
      for (const auto& x : row[2]) val.push_back(output.symbols().index(str(x, "s")));
    } else {
      val.push_back(output.symbols().index(str(row[2], "s")));
    }
    s[slot] = std::move(val);
    sSeen[slot] = 1;
  }
  for (char seen : sSeen) {
    if (!seen) throw MalformedInputError("document: monoid-machine s table is not total");
  }
  return MonoidMealyMachine(doc_name(j), std::move(states), std::move(input),
                            std::move(output), std::move(d), std::move(s));
}

FinCat parse_category(const Json& j) {
  FinSet objects = finset(field(j, "objects"), "objects", "objects");
  FinSet morphisms = finset(field(j, "morphisms"), "morphisms", "morphisms");
  auto obj_table = [&](const Json& t, const char* what) {
    std::vector<int> out(static_cast<size_t>(morphisms.size()), -1);
    for (const auto& [m, o] : pairs(t, what)) {
      out[static_cast<size_t>(morphisms.index(m))] = objects.index(o);
    }
    for (int v : out) {
      if (v < 0) throw MalformedInputError("document: " + std::string(what) +
                                           " table is not total");
    }
    return out;
  };
  std::vector<int> src = obj_table(field(j, "src"), "src");
  std::vector<int> tgt = obj_table(field(j, "tgt"), "tgt");
  std::vector<int> id(static_cast<size_t>(objects.size()), -1);
  for (const auto& [o, m] : pairs(field(j, "id"), "id")) {
    id[static_cast<size_t>(objects.index(o))] = morphisms.index(m);
  }
  for (int v : id) {
    if (v < 0) throw MalformedInputError("document: id table is not total");
  }
  std::vector<std::array<int, 3>> comp;
  for (const auto& [g, f, gf] : triples(field(j, "comp"), "comp")) {
    comp.push_back({morphisms.index(g), morphisms.index(f), morphisms.index(gf)});
  }
  return FinCat(doc_name(j), std::move(objects), std::move(morphisms), std::move(src),
                std::move(tgt), std::move(id), comp);
}

FinCat parse_category_ref(const Json& j, const DocContext& ctx) {
  return parse_category(ctx.deref(j));
}

CatFunctor parse_functor_tables(const Json& j, const std::string& name, FinCat dom,
                                FinCat cod) {
  std::vector<int> onObj(static_cast<size_t>(dom.objects().size()), -1);
  for (const auto& [x, fx] : pairs(field(j, "objects"), "functor objects")) {
    onObj[static_cast<size_t>(dom.objects().index(x))] = cod.objects().index(fx);
  }
  std::vector<int> onMor(static_cast<size_t>(dom.morphisms().size()), -1);
  for (const auto& [m, fm] : pairs(field(j, "morphisms"), "functor morphisms")) {
    onMor[static_cast<size_t>(dom.morphisms().index(m))] = cod.morphisms().index(fm);
  }
  for (int v : onObj) {
    if (v < 0) throw MalformedInputError("document: functor object table is not total");
  }
  for (int v : onMor) {
    if (v < 0) throw MalformedInputError("document: functor morphism table is not total");
  }
  return CatFunctor(name, std::move(dom), std::move(cod), std::move(onObj), std::move(onMor));
}

CatFunctor parse_functor(const Json& j, const DocContext& ctx) {
  FinCat dom = parse_category_ref(field(j, "dom"), ctx);
  FinCat cod = parse_category_ref(field(j, "cod"), ctx);
  return parse_functor_tables(j, doc_name(j), std::move(dom), std::move(cod));
}

Rel parse_relation(const Json& j) {
  FinSet src = finset(field(j, "src"), "src", "src");
  FinSet dst = finset(field(j, "dst"), "dst", "dst");
  return Rel(std::move(src), std::move(dst), pairs(field(j, "pairs"), "pairs"));
}

SetFunctor parse_set_functor(const Json& j, const DocContext& ctx) {
  FinCat dom = parse_category_ref(field(j, "dom"), ctx);
  std::vector<FinSet> onObj(static_cast<size_t>(dom.objects().size()));
  std::vector<char> objSeen(onObj.size(), 0);
  const Json& objs = field(j, "objects");
  if (!objs.is_array()) {
    throw MalformedInputError("document: expected an array for set-functor objects");
  }
  for (const auto& row : objs) {
    if (!row.is_array() || row.size() != 2) {
      throw MalformedInputError("document: each set-functor object entry must be "
                                "[object, [elements]]");
    }
    int o = dom.objects().index(str(row[0], "set-functor objects"));
    onObj[static_cast<size_t>(o)] =
        finset(row[1], dom.objects().label(o), "set-functor objects");
    objSeen[static_cast<size_t>(o)] = 1;
  }
  for (char seen : objSeen) {
    if (!seen) throw MalformedInputError("document: set-functor object table is not total");
  }
  std::vector<FinFn> onMor(static_cast<size_t>(dom.morphisms().size()));
  std::vector<char> morSeen(onMor.size(), 0);
  const Json& mors = field(j, "morphisms");
  if (!mors.is_array()) {
    throw MalformedInputError("document: expected an array for set-functor morphisms");
  }
  for (const auto& row : mors) {
    if (!row.is_array() || row.size() != 2) {
      throw MalformedInputError("document: each set-functor morphism entry must be "
                                "[morphism, [[x, y], ...]]");
    }
    int m = dom.morphisms().index(str(row[0], "set-functor morphisms"));
    onMor[static_cast<size_t>(m)] =
        FinFn::from_labels(onObj[static_cast<size_t>(dom.src(m))],
                           onObj[static_cast<size_t>(dom.tgt(m))],
                           pairs(row[1], "set-functor morphisms"));
    morSeen[static_cast<size_t>(m)] = 1;
  }
  for (char seen : morSeen) {
    if (!seen) throw MalformedInputError("document: set-functor morphism table is not total");
  }
  return SetFunctor(doc_name(j), std::move(dom), std::move(onObj), std::move(onMor));
}

std::vector<int> component_table(const Json& j, const FinCat& cat, const char* what) {
  std::vector<int> out(static_cast<size_t>(cat.objects().size()), -1);
  for (const auto& [o, m] : pairs(j, what)) {
    out[static_cast<size_t>(cat.objects().index(o))] = cat.morphisms().index(m);
  }
  for (int v : out) {
    if (v < 0) throw MalformedInputError("document: " + std::string(what) +
                                         " table is not total");
  }
  return out;
}

MonadDocument parse_monad(const Json& j, const DocContext& ctx) {
  FinCat cat = parse_category_ref(field(j, "cat"), ctx);
  CatFunctor t = parse_functor_tables(field(j, "functor"), "T", cat, cat);
  std::vector<int> eta = component_table(field(j, "eta"), cat, "eta");
  std::vector<int> mu = component_table(field(j, "mu"), cat, "mu");
  MonadLawReport laws = check_monad_laws(t, eta, mu);
  if (!laws.ok) throw InvariantViolation("monad document: " + laws.detail);
  MonadDocument doc{std::move(t), std::move(eta), std::move(mu), std::nullopt, {}};
  if (j.contains("input")) {
    const Json& in = j["input"];
    doc.input = parse_functor_tables(field(in, "functor"), "i", cat, cat);
    doc.kappa = component_table(field(in, "kappa"), cat, "kappa");
  }
  return doc;
}

FinFn parse_pair_map(const Json& j, const FinSet& leftDom, const FinSet& rightDom,
                     const FinSet& leftCod, const FinSet& rightCod, const char* what) {
  // Quadruples [x, y, x', y'] describing (x, y) -> (x', y').
  if (!j.is_array()) {
    throw MalformedInputError("document: expected an array for " + std::string(what));
  }
  FinSet dom = product_set(leftDom, rightDom);
  FinSet cod = product_set(leftCod, rightCod);
  std::vector<int> table(static_cast<size_t>(dom.size()), -1);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 4) {
      throw MalformedInputError("document: each entry of " + std::string(what) +
                                " must be [x, y, x', y']");
    }
    int slot = pair_index(leftDom, rightDom, leftDom.index(str(row[0], what)),
                          rightDom.index(str(row[1], what)));
    table[static_cast<size_t>(slot)] =
        pair_index(leftCod, rightCod, leftCod.index(str(row[2], what)),
                   rightCod.index(str(row[3], what)));
  }
  for (int v : table) {
    if (v < 0) throw MalformedInputError("document: " + std::string(what) +
                                         " table is not total");
  }
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

Intertwiner parse_intertwiner(const Json& j, const DocContext& ctx) {
  MealyMachine src = parse_mealy(ctx.deref(field(j, "src")));
  MealyMachine dst = parse_mealy(ctx.deref(field(j, "dst")));
  FinSet u = finset(field(j, "u"), "u", "u");
  FinSet v = finset(field(j, "v"), "v", "v");
  FinFn iota = parse_pair_map(field(j, "iota"), dst.input(), u, u, src.input(), "iota");
  FinFn eps = parse_pair_map(field(j, "eps"), dst.states(), u, v, src.states(), "eps");
  FinFn omega = parse_pair_map(field(j, "omega"), dst.output(), u, v, src.output(), "omega");
  return Intertwiner(std::move(src), std::move(dst), std::move(u), std::move(v),
                     std::move(iota), std::move(eps), std::move(omega));
}

IntertwinerTwoCell parse_two_cell(const Json& j, const DocContext& ctx) {
  Intertwiner src = parse_intertwiner(ctx.deref(field(j, "src")), ctx);
  Intertwiner dst = parse_intertwiner(ctx.deref(field(j, "dst")), ctx);
  FinFn f = FinFn::from_labels(src.u, dst.u, pairs(field(j, "f"), "f"));
  FinFn g = FinFn::from_labels(src.v, dst.v, pairs(field(j, "g"), "g"));
  return IntertwinerTwoCell(std::move(src), std::move(dst), std::move(f), std::move(g));
}

Document parse_json_document(const Json& root, const DocContext& ctx) {
  if (!root.is_object()) {
    throw MalformedInputError("document: top level must be an object");
  }
  std::string kind = str(field(root, "kind"), "kind");
  Document doc;
  if (kind == "mealy") {
    bool nd = root.contains("nondeterministic") && root["nondeterministic"].is_boolean() &&
              root["nondeterministic"].get<bool>();
    doc.kind = Document::Kind::Mealy;
    if (nd) {
      doc.value = parse_powerset_mealy(root);
    } else {
      doc.value = parse_mealy(root);
    }
  } else if (kind == "moore") {
    doc.kind = Document::Kind::Moore;
    doc.value = parse_moore(root);
  } else if (kind == "monoid") {
    doc.kind = Document::Kind::Monoid;
    doc.value = parse_monoid(root);
  } else if (kind == "monoid-machine") {
    doc.kind = Document::Kind::MonoidMachine;
    doc.value = parse_monoid_machine(root, ctx);
  } else if (kind == "category") {
    doc.kind = Document::Kind::Category;
    doc.value = parse_category(root);
  } else if (kind == "functor") {
    doc.kind = Document::Kind::Functor;
    doc.value = parse_functor(root, ctx);
  } else if (kind == "relation") {
    doc.kind = Document::Kind::Relation;
    doc.value = parse_relation(root);
  } else if (kind == "set-functor") {
    doc.kind = Document::Kind::SetFunctorKind;
    doc.value = parse_set_functor(root, ctx);
  } else if (kind == "monad") {
    doc.kind = Document::Kind::Monad;
    doc.value = parse_monad(root, ctx);
  } else if (kind == "intertwiner") {
    doc.kind = Document::Kind::IntertwinerKind;
    doc.value = parse_intertwiner(root, ctx);
  } else if (kind == "two-cell") {
    doc.kind = Document::Kind::TwoCell;
    doc.value = parse_two_cell(root, ctx);
  } else {
    throw MalformedInputError("document: unknown kind '" + kind + "'");
  }
  return doc;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error_at(text, e.byte, e.what());
  }
}

void collect_defs(const Json& root, DocContext& ctx) {
  if (!root.is_object() || !root.contains("defs")) return;
  const Json& defs = root["defs"];
  if (!defs.is_array()) {
    throw MalformedInputError("document: defs must be an array");
  }
  for (const auto& def : defs) {
    std::string name = doc_name(def);
    if (name.empty()) {
      throw MalformedInputError("document: every def needs a name");
    }
    if (!ctx.defs.emplace(name, def).second) {
      throw MalformedInputError("document: duplicate def '" + name + "'");
    }
  }
}

} // namespace

Document parse_document(const std::string& text) {
  Json root = parse_json(text);
  DocContext ctx;
  collect_defs(root, ctx);
  return parse_json_document(root, ctx);
}

Document load_document(const std::string& path) {
  namespace fs = std::filesystem;
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json root = parse_json(buffer.str());
  DocContext ctx;
  std::set<std::string> visited;
  // Imports contribute defs; cycles are cut by the visited set.
  auto load_imports = [&](auto&& self, const Json& node, const fs::path& dir) -> void {
    if (!node.is_object() || !node.contains("imports")) return;
    if (!node["imports"].is_array()) {
      throw MalformedInputError("document: imports must be an array of paths");
    }
    for (const auto& imp : node["imports"]) {
      fs::path p = dir / str(imp, "imports");
      std::string canon = fs::weakly_canonical(p).string();
      if (!visited.insert(canon).second) continue;
      std::ifstream f(p);
      if (!f) throw MalformedInputError("cannot open import '" + p.string() + "'");
      std::stringstream sub;
      sub << f.rdbuf();
      Json subRoot = parse_json(sub.str());
      self(self, subRoot, p.parent_path());
      collect_defs(subRoot, ctx);
      // The imported document itself is referable under its own name.
      std::string name = doc_name(subRoot);
      if (!name.empty()) ctx.defs.emplace(name, subRoot);
    }
  };
  load_imports(load_imports, root, fs::path(path).parent_path());
  collect_defs(root, ctx);
  return parse_json_document(root, ctx);
}

namespace {

Json set_json(const FinSet& s) {
  Json out = Json::array();
  for (const auto& l : s.labels()) out.push_back(l);
  return out;
}

Json mealy_json(const MealyMachine& m) {
  Json j;
  j["kind"] = "mealy";
  if (!m.name().empty()) j["name"] = m.name();
  j["states"] = set_json(m.states());
  j["input"] = set_json(m.input());
  j["output"] = set_json(m.output());
  Json d = Json::array(), s = Json::array();
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      d.push_back({m.states().label(e), m.input().label(a), m.states().label(m.d(e, a))});
      s.push_back({m.states().label(e), m.input().label(a), m.output().label(m.s(e, a))});
    }
  }
  j["d"] = std::move(d);
  j["s"] = std::move(s);
  return j;
}

Json powerset_mealy_json(const PowersetMealy& m) {
  Json j;
  j["kind"] = "mealy";
  if (!m.name().empty()) j["name"] = m.name();
  j["nondeterministic"] = true;
  j["states"] = set_json(m.states());
  j["input"] = set_json(m.input());
  j["output"] = set_json(m.output());
  auto table = [&](auto get, const FinSet& cod) {
    Json t = Json::array();
    for (int e = 0; e < m.states().size(); ++e) {
      for (int a = 0; a < m.input().size(); ++a) {
        Json sub = Json::array();
        for (int x : get(e, a)) sub.push_back(cod.label(x));
        t.push_back({m.states().label(e), m.input().label(a), std::move(sub)});
      }
    }
    return t;
  };
  j["d"] = table([&](int e, int a) { return m.d(e, a); }, m.states());
  j["s"] = table([&](int e, int a) { return m.s(e, a); }, m.output());
  return j;
}

Json moore_json(const MooreMachine& m) {
  Json j;
  j["kind"] = "moore";
  if (!m.name().empty()) j["name"] = m.name();
  j["states"] = set_json(m.states());
  j["input"] = set_json(m.input());
  j["output"] = set_json(m.output());
  Json d = Json::array(), s = Json::array();
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      d.push_back({m.states().label(e), m.input().label(a), m.states().label(m.d(e, a))});
    }
    s.push_back({m.states().label(e), m.output().label(m.s(e))});
  }
  j["d"] = std::move(d);
  j["s"] = std::move(s);
  return j;
}

Json monoid_json(const FinMonoid& m) {
  Json j;
  j["kind"] = "monoid";
  if (!m.name().empty()) j["name"] = m.name();
  j["carrier"] = set_json(m.carrier());
  j["unit"] = m.carrier().label(m.unit());
  Json mul = Json::array();
  for (int a = 0; a < m.carrier().size(); ++a) {
    for (int b = 0; b < m.carrier().size(); ++b) {
      mul.push_back(
          {m.carrier().label(a), m.carrier().label(b), m.carrier().label(m.mul(a, b))});
    }
  }
  j["mul"] = std::move(mul);
  return j;
}

Json monoid_desc_json(const MonoidDesc& m) {
  if (m.is_free()) {
    Json j;
    j["free"] = set_json(m.symbols());
    return j;
  }
  return monoid_json(m.finite());
}

Json monoid_machine_json(const MonoidMealyMachine& m) {
  Json j;
  j["kind"] = "monoid-machine";
  if (!m.name().empty()) j["name"] = m.name();
  j["states"] = set_json(m.states());
  j["input"] = monoid_desc_json(m.input());
  j["output"] = monoid_desc_json(m.output());
  Json d = Json::array(), s = Json::array();
  const FinSet& syms = m.input().symbols();
  for (int e = 0; e < m.states().size(); ++e) {
    for (int x = 0; x < syms.size(); ++x) {
      d.push_back({m.states().label(e), syms.label(x), m.states().label(m.d_at(e, x))});
      const MonVal& v = m.s_at(e, x);
      if (m.output().is_free()) {
        Json word = Json::array();
        for (int l : v) word.push_back(m.output().symbols().label(l));
        s.push_back({m.states().label(e), syms.label(x), std::move(word)});
      } else {
        s.push_back({m.states().label(e), syms.label(x), m.output().symbols().label(v[0])});
      }
    }
  }
  j["d"] = std::move(d);
  j["s"] = std::move(s);
  return j;
}

Json category_json(const FinCat& c) {
  Json j;
  j["kind"] = "category";
  if (!c.name().empty()) j["name"] = c.name();
  j["objects"] = set_json(c.objects());
  j["morphisms"] = set_json(c.morphisms());
  Json src = Json::array(), tgt = Json::array(), id = Json::array(), comp = Json::array();
  for (int m = 0; m < c.morphisms().size(); ++m) {
    src.push_back({c.morphisms().label(m), c.objects().label(c.src(m))});
    tgt.push_back({c.morphisms().label(m), c.objects().label(c.tgt(m))});
  }
  for (int o = 0; o < c.objects().size(); ++o) {
    id.push_back({c.objects().label(o), c.morphisms().label(c.id(o))});
  }
  for (int g = 0; g < c.morphisms().size(); ++g) {
    for (int f = 0; f < c.morphisms().size(); ++f) {
      if (!c.composable(g, f)) continue;
      comp.push_back({c.morphisms().label(g), c.morphisms().label(f),
                      c.morphisms().label(c.compose(g, f))});
    }
  }
  j["src"] = std::move(src);
  j["tgt"] = std::move(tgt);
  j["id"] = std::move(id);
  j["comp"] = std::move(comp);
  return j;
}

Json functor_tables_json(const CatFunctor& f) {
  Json j;
  Json objects = Json::array(), morphisms = Json::array();
  for (int o = 0; o < f.dom().objects().size(); ++o) {
    objects.push_back({f.dom().objects().label(o), f.cod().objects().label(f.obj(o))});
  }
  for (int m = 0; m < f.dom().morphisms().size(); ++m) {
    morphisms.push_back({f.dom().morphisms().label(m), f.cod().morphisms().label(f.mor(m))});
  }
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  return j;
}

Json functor_json(const CatFunctor& f) {
  Json j;
  j["kind"] = "functor";
  if (!f.name().empty()) j["name"] = f.name();
  j["dom"] = category_json(f.dom());
  j["cod"] = category_json(f.cod());
  Json tables = functor_tables_json(f);
  j["objects"] = tables["objects"];
  j["morphisms"] = tables["morphisms"];
  return j;
}

Json relation_json(const Rel& r) {
  Json j;
  j["kind"] = "relation";
  j["src"] = set_json(r.src());
  j["dst"] = set_json(r.dst());
  Json prs = Json::array();
  for (auto [a, b] : r.pairs()) prs.push_back({r.src().label(a), r.dst().label(b)});
  j["pairs"] = std::move(prs);
  return j;
}

Json set_functor_json(const SetFunctor& f) {
  Json j;
  j["kind"] = "set-functor";
  if (!f.name().empty()) j["name"] = f.name();
  j["dom"] = category_json(f.dom());
  Json objects = Json::array(), morphisms = Json::array();
  for (int o = 0; o < f.dom().objects().size(); ++o) {
    objects.push_back({f.dom().objects().label(o), set_json(f.at(o))});
  }
  for (int m = 0; m < f.dom().morphisms().size(); ++m) {
    Json entries = Json::array();
    const FinFn& fn = f.map(m);
    for (int x = 0; x < fn.dom().size(); ++x) {
      entries.push_back({fn.dom().label(x), fn.cod().label(fn(x))});
    }
    morphisms.push_back({f.dom().morphisms().label(m), std::move(entries)});
  }
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  return j;
}

Json component_json(const std::vector<int>& comps, const FinCat& cat) {
  Json out = Json::array();
  for (int o = 0; o < cat.objects().size(); ++o) {
    out.push_back({cat.objects().label(o),
                   cat.morphisms().label(comps[static_cast<size_t>(o)])});
  }
  return out;
}

Json monad_json(const MonadDocument& m) {
  Json j;
  j["kind"] = "monad";
  j["cat"] = category_json(m.t.dom());
  j["functor"] = functor_tables_json(m.t);
  j["eta"] = component_json(m.eta, m.t.dom());
  j["mu"] = component_json(m.mu, m.t.dom());
  if (m.input) {
    Json in;
    in["functor"] = functor_tables_json(*m.input);
    in["kappa"] = component_json(m.kappa, m.t.dom());
    j["input"] = std::move(in);
  }
  return j;
}

Json pair_map_json(const FinFn& fn, const FinSet& leftDom, const FinSet& rightDom,
                   const FinSet& leftCod, const FinSet& rightCod) {
  Json out = Json::array();
  for (int x = 0; x < leftDom.size(); ++x) {
    for (int y = 0; y < rightDom.size(); ++y) {
      auto [a, b] = unpair_index(leftCod, rightCod, fn(pair_index(leftDom, rightDom, x, y)));
      out.push_back({leftDom.label(x), rightDom.label(y), leftCod.label(a),
                     rightCod.label(b)});
    }
  }
  return out;
}

Json intertwiner_json(const Intertwiner& it) {
  Json j;
  j["kind"] = "intertwiner";
  j["src"] = mealy_json(it.src);
  j["dst"] = mealy_json(it.dst);
  j["u"] = set_json(it.u);
  j["v"] = set_json(it.v);
  j["iota"] = pair_map_json(it.iota, it.dst.input(), it.u, it.u, it.src.input());
  j["eps"] = pair_map_json(it.eps, it.dst.states(), it.u, it.v, it.src.states());
  j["omega"] = pair_map_json(it.omega, it.dst.output(), it.u, it.v, it.src.output());
  return j;
}

Json two_cell_json(const IntertwinerTwoCell& tc) {
  Json j;
  j["kind"] = "two-cell";
  j["src"] = intertwiner_json(tc.src);
  j["dst"] = intertwiner_json(tc.dst);
  Json f = Json::array(), g = Json::array();
  for (int u = 0; u < tc.src.u.size(); ++u) {
    f.push_back({tc.src.u.label(u), tc.dst.u.label(tc.f(u))});
  }
  for (int v = 0; v < tc.src.v.size(); ++v) {
    g.push_back({tc.src.v.label(v), tc.dst.v.label(tc.g(v))});
  }
  j["f"] = std::move(f);
  j["g"] = std::move(g);
  return j;
}

} // namespace

std::string serialize_document(const Document& doc) {
  Json j;
  switch (doc.kind) {
  case Document::Kind::Mealy:
    j = doc.holds<PowersetMealy>() ? powerset_mealy_json(doc.as<PowersetMealy>())
                                   : mealy_json(doc.as<MealyMachine>());
    break;
  case Document::Kind::Moore:
    j = moore_json(doc.as<MooreMachine>());
    break;
  case Document::Kind::Monoid:
    j = monoid_json(doc.as<FinMonoid>());
    break;
  case Document::Kind::MonoidMachine:
    j = monoid_machine_json(doc.as<MonoidMealyMachine>());
    break;
  case Document::Kind::Category:
    j = category_json(doc.as<FinCat>());
    break;
  case Document::Kind::Functor:
    j = functor_json(doc.as<CatFunctor>());
    break;
  case Document::Kind::Relation:
    j = relation_json(doc.as<Rel>());
    break;
  case Document::Kind::SetFunctorKind:
    j = set_functor_json(doc.as<SetFunctor>());
    break;
  case Document::Kind::Monad:
    j = monad_json(doc.as<MonadDocument>());
    break;
  case Document::Kind::IntertwinerKind:
    j = intertwiner_json(doc.as<Intertwiner>());
    break;
  case Document::Kind::TwoCell:
    j = two_cell_json(doc.as<IntertwinerTwoCell>());
    break;
  }
  return j.dump(2) + "\n";
}

bool document_equal(const Document& a, const Document& b) {
  if (a.kind != b.kind) return false;
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& va) {
        using T = std::decay_t<decltype(va)>;
        return va == std::get<T>(b.value);
      },
      a.value);
}

std::string kind_name(Document::Kind kind) {
  switch (kind) {
  case Document::Kind::Mealy: return "mealy";
  case Document::Kind::Moore: return "moore";
  case Document::Kind::Monoid: return "monoid";
  case Document::Kind::MonoidMachine: return "monoid-machine";
  case Document::Kind::Category: return "category";
  case Document::Kind::Functor: return "functor";
  case Document::Kind::Relation: return "relation";
  case Document::Kind::SetFunctorKind: return "set-functor";
  case Document::Kind::Monad: return "monad";
  case Document::Kind::IntertwinerKind: return "intertwiner";
  case Document::Kind::TwoCell: return "two-cell";
  }
  return "unknown";
}

} // namespace fugue
