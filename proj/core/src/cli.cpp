#include "fugue/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fugue/document.hpp"
#include "fugue/generators.hpp"
#include "fugue/guitart.hpp"
#include "fugue/kan.hpp"
#include "fugue/kleisli.hpp"
#include "fugue/laws.hpp"
#include "fugue/rel.hpp"

namespace fugue::cli {

using Json = nlohmann::ordered_json;

namespace {

Json doc_json(const Document& doc) { return Json::parse(serialize_document(doc)); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

/// "101" letter-per-character when all labels are single characters,
/// otherwise a comma-separated list.
Word parse_word_arg(const FinSet& alphabet, const std::string& text) {
  bool singleChar = true;
  for (const auto& l : alphabet.labels()) singleChar = singleChar && l.size() == 1;
  std::vector<std::string> letters;
  if (text.find(',') != std::string::npos || !singleChar) {
    std::string cur;
    for (char ch : text) {
      if (ch == ',') {
        letters.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty() || !text.empty()) letters.push_back(cur);
  } else {
    for (char ch : text) letters.emplace_back(1, ch);
  }
  if (text.empty()) letters.clear();
  return Word::from_labels(alphabet, letters);
}

std::string join_word(const Word& w) {
  bool singleChar = true;
  for (const auto& l : w.alphabet().labels()) singleChar = singleChar && l.size() == 1;
  std::string out;
  auto labels = w.letter_labels();
  for (size_t k = 0; k < labels.size(); ++k) {
    if (k && !singleChar) out += ",";
    out += labels[k];
  }
  return out;
}

Json monval_json(const MonoidDesc& m, const MonVal& v) {
  if (m.is_free()) {
    Json arr = Json::array();
    for (int l : v) arr.push_back(m.symbols().label(l));
    return arr;
  }
  return Json(m.symbols().label(v.at(0)));
}

int fail_with(std::ostream& out, const char* check, const Json& counterexample,
              const Document& doc) {
  Json j;
  j["check"] = check;
  j["verdict"] = "fail";
  j["counterexample"] = counterexample;
  j["document"] = doc_json(doc);
  emit(out, j);
  return 1;
}

const MealyMachine& expect_mealy(const Document& doc) {
  if (!doc.holds<MealyMachine>()) {
    throw TypeError("expected a deterministic mealy document");
  }
  return doc.as<MealyMachine>();
}

const MonoidMealyMachine& expect_monoid_machine(const Document& doc) {
  if (!doc.holds<MonoidMealyMachine>()) {
    throw TypeError("expected a monoid-machine document");
  }
  return doc.as<MonoidMealyMachine>();
}

const Rel& expect_relation(const Document& doc) {
  if (!doc.holds<Rel>()) throw TypeError("expected a relation document");
  return doc.as<Rel>();
}

Json functor_tables(const CatFunctor& f) {
  Json objects = Json::array(), morphisms = Json::array();
  for (int o = 0; o < f.dom().objects().size(); ++o) {
    objects.push_back({f.dom().objects().label(o), f.cod().objects().label(f.obj(o))});
  }
  for (int m = 0; m < f.dom().morphisms().size(); ++m) {
    morphisms.push_back({f.dom().morphisms().label(m), f.cod().morphisms().label(f.mor(m))});
  }
  Json j;
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  return j;
}

Json nat_trans_tables(const NatTrans& nt) {
  Json comps = Json::array();
  const FinCat& c = nt.src().dom();
  for (int o = 0; o < c.objects().size(); ++o) {
    Json entries = Json::array();
    const FinFn& fn = nt.at(o);
    for (int x = 0; x < fn.dom().size(); ++x) {
      entries.push_back({fn.dom().label(x), fn.cod().label(fn(x))});
    }
    comps.push_back({c.objects().label(o), std::move(entries)});
  }
  return comps;
}

// ---- command handlers ------------------------------------------------------

int cmd_run(const std::string& file, const std::string& wordText,
            const std::string& state, std::ostream& out) {
  Document doc = load_document(file);
  if (doc.holds<MealyMachine>()) {
    const MealyMachine& m = doc.as<MealyMachine>();
    std::string start = state.empty() ? m.states().label(0) : state;
    auto [fin, w] = run_mealy(m, start, parse_word_arg(m.input(), wordText));
    out << "output: " << join_word(w) << "\n";
    out << "state: " << fin << "\n";
    return 0;
  }
  if (doc.holds<MooreMachine>()) {
    const MooreMachine& m = doc.as<MooreMachine>();
    int start = state.empty() ? 0 : m.states().index(state);
    Word w = parse_word_arg(m.input(), wordText);
    std::vector<int> outs = run_moore(m, start, w.letters());
    Word trace(m.output(), std::move(outs));
    out << "output: " << join_word(trace) << "\n";
    return 0;
  }
  throw UsageError("run expects a deterministic machine; use 'kleisli run' for "
                   "nondeterministic ones");
}

int cmd_compose(const std::string& file2, const std::string& file1,
                const std::string& wordText, const std::string& state, std::ostream& out) {
  MealyMachine m2 = expect_mealy(load_document(file2));
  MealyMachine m1 = expect_mealy(load_document(file1));
  MealyMachine comp = compose_diamond(m2, m1);
  if (wordText.empty()) {
    emit(out, doc_json({Document::Kind::Mealy, comp}));
    return 0;
  }
  std::string start = state.empty() ? comp.states().label(0) : state;
  auto [fin, w] = run_mealy(comp, start, parse_word_arg(comp.input(), wordText));
  out << "output: " << join_word(w) << "\n";
  out << "state: " << fin << "\n";
  return 0;
}

int cmd_fugal_check(const std::string& file, int len, std::ostream& out) {
  Document doc = load_document(file);
  const MonoidMealyMachine& m = expect_monoid_machine(doc);
  FugalWitness w = m.input().is_free() ? is_fugal(m, len) : is_fugal(m);
  if (w.ok) {
    out << "ok: fugal"
        << (m.input().is_free() ? " (verified to length " + std::to_string(len) + ")" : "")
        << "\n";
    return 0;
  }
  Json cex;
  cex["state"] = m.states().label(w.state);
  cex["m"] = monval_json(m.input(), w.m);
  cex["m2"] = monval_json(m.input(), w.m2);
  cex["detail"] = w.detail;
  return fail_with(out, "fugal", cex, doc);
}

int cmd_fugal_extend(const std::string& file, const std::string& wordText,
                     const std::string& state, std::ostream& out) {
  MealyMachine m = expect_mealy(load_document(file));
  MonoidMealyMachine ext = fugal_extension(m);
  if (!wordText.empty()) {
    Word w = parse_word_arg(m.input(), wordText);
    int e0 = state.empty() ? 0 : m.states().index(state);
    MonVal res = ext.out(e0, w.letters());
    Word outWord(m.output(), std::move(res));
    out << "output: " << join_word(outWord) << "\n";
    out << "state: " << m.states().label(ext.act(e0, w.letters())) << "\n";
    return 0;
  }
  emit(out, doc_json({Document::Kind::MonoidMachine, ext}));
  return 0;
}

int cmd_adjunction(const std::vector<std::string>& files, int len, std::ostream& out) {
  if (files.size() == 2) {
    Document mdoc = load_document(files[0]);
    Document ndoc = load_document(files[1]);
    const MealyMachine& m0 = expect_mealy(mdoc);
    if (!ndoc.holds<FinMonoid>()) throw TypeError("expected a monoid document");
    const FinMonoid& target = ndoc.as<FinMonoid>();
    RoundTripReport hk = verify_hk(m0, target);
    if (!hk.ok) {
      Json cex;
      cex["detail"] = hk.detail;
      return fail_with(out, "adjunction-hk", cex, mdoc);
    }
    out << "ok: HK = id (exact)\n";
    RoundTripReport kh = verify_kh(k_extend(m0, target), len);
    if (!kh.ok) {
      Json cex;
      cex["detail"] = kh.detail;
      return fail_with(out, "adjunction-kh", cex, mdoc);
    }
    out << "ok: KH = id on the K-image (verified to length " << len << ")\n";
    return 0;
  }
  if (files.size() == 1) {
    Document doc = load_document(files[0]);
    const MonoidMealyMachine& m = expect_monoid_machine(doc);
    RoundTripReport kh = verify_kh(m, len);
    if (!kh.ok) {
      Json cex;
      cex["detail"] = kh.detail;
      return fail_with(out, "adjunction-kh", cex, doc);
    }
    out << "ok: KH = id (verified to length " << len << ")\n";
    return 0;
  }
  throw UsageError("adjunction roundtrip takes one monoid-machine document, or a mealy "
                   "document plus a monoid document");
}

int cmd_guitart_translate(const std::string& file, std::ostream& out) {
  Document doc = load_document(file);
  const MonoidMealyMachine& m = expect_monoid_machine(doc);
  TranslationResult t = translation_category(m);
  OpfibReport r = is_discrete_opfibration(t.projection);
  Json j;
  j["category"] = doc_json({Document::Kind::Category, t.cat});
  j["projection"] = functor_tables(t.projection);
  j["opfibration"] = r.ok ? "ok" : r.detail;
  emit(out, j);
  return r.ok ? 0 : 1;
}

int cmd_guitart_sigma(const std::string& file, std::ostream& out) {
  Document doc = load_document(file);
  const MonoidMealyMachine& m = expect_monoid_machine(doc);
  SigmaResult res = sigma_functor(m);
  if (res.status == SigmaResult::Status::Ok) {
    Json j;
    j["check"] = "sigma";
    j["verdict"] = "ok";
    j["functor"] = functor_tables(*res.functor);
    emit(out, j);
    return 0;
  }
  Json cex;
  cex["state"] = m.states().label(res.state);
  if (res.status == SigmaResult::Status::CompositionFailure) {
    cex["m"] = monval_json(m.input(), res.m);
    cex["m2"] = monval_json(m.input(), res.m2);
  }
  cex["detail"] = res.detail;
  return fail_with(out, "sigma", cex, doc);
}

int cmd_guitart_compose(const std::string& file1, const std::string& file2,
                        std::ostream& out) {
  Document d1 = load_document(file1);
  Document d2 = load_document(file2);
  const MonoidMealyMachine& m1 = expect_monoid_machine(d1);
  const MonoidMealyMachine& m2 = expect_monoid_machine(d2);
  GuitartSpan sp = compose_spans(pi_span(m1), pi_span(m2));
  Json j;
  j["apex"] = doc_json({Document::Kind::Category, sp.apex()});
  j["left"] = functor_tables(sp.left);
  j["right"] = functor_tables(sp.right);
  emit(out, j);
  return 0;
}

int cmd_guitart_verify(const std::string& file1, const std::string& file2,
                       std::ostream& out) {
  Document d1 = load_document(file1);
  Document d2 = load_document(file2);
  const MonoidMealyMachine& m1 = expect_monoid_machine(d1);
  const MonoidMealyMachine& m2 = expect_monoid_machine(d2);
  PiReport r = verify_pi_functoriality(m1, m2);
  if (r.ok) {
    out << "ok: pullback composite is isomorphic to the composite translation span\n";
    return 0;
  }
  Json cex;
  cex["detail"] = r.detail;
  return fail_with(out, "pi-functoriality", cex, d1);
}

int cmd_kleisli_lift(const std::string& file, std::ostream& out) {
  MealyMachine m = expect_mealy(load_document(file));
  emit(out, doc_json({Document::Kind::Mealy, lift_deterministic(m)}));
  return 0;
}

int cmd_kleisli_expand(const std::string& file, int limit, std::ostream& out) {
  Document doc = load_document(file);
  if (!doc.holds<PowersetMealy>()) {
    throw TypeError("kleisli expand expects a nondeterministic mealy document");
  }
  MealyMachine big = expand(doc.as<PowersetMealy>(), limit);
  emit(out, doc_json({Document::Kind::Mealy, big}));
  return 0;
}

int cmd_kleisli_run(const std::string& file, const std::string& wordText,
                    const std::string& start, std::ostream& out) {
  Document doc = load_document(file);
  if (!doc.holds<PowersetMealy>()) {
    throw TypeError("kleisli run expects a nondeterministic mealy document");
  }
  const PowersetMealy& n = doc.as<PowersetMealy>();
  std::vector<int> s0;
  if (start.empty()) {
    s0.push_back(0);
  } else {
    std::string cur;
    for (char ch : start) {
      if (ch == ',') {
        s0.push_back(n.states().index(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) s0.push_back(n.states().index(cur));
  }
  Word w = parse_word_arg(n.input(), wordText);
  auto trace = run_nondeterministic(n, s0, w.letters());
  Json steps = Json::array();
  for (const auto& step : trace) {
    Json st = Json::array(), ot = Json::array();
    for (int e : step.states) st.push_back(n.states().label(e));
    for (int y : step.outputs) ot.push_back(n.output().label(y));
    Json row;
    row["states"] = std::move(st);
    row["outputs"] = std::move(ot);
    steps.push_back(std::move(row));
  }
  Json j;
  j["trace"] = std::move(steps);
  emit(out, j);
  return 0;
}

int cmd_rel_ran(const std::string& iFile, const std::string& oFile, bool mealy,
                std::ostream& out) {
  Rel i = expect_relation(load_document(iFile));
  Rel o = expect_relation(load_document(oFile));
  Rel r = ran_reachability(i, o, mealy ? RelMode::Mealy : RelMode::Moore);
  emit(out, doc_json({Document::Kind::Relation, r}));
  return 0;
}

int cmd_rel_verify_terminal(const std::string& rFile, const std::string& iFile,
                            const std::string& oFile, bool mealy, int limit,
                            std::ostream& out) {
  Document rdoc = load_document(rFile);
  Rel r = expect_relation(rdoc);
  Rel i = expect_relation(load_document(iFile));
  Rel o = expect_relation(load_document(oFile));
  TerminalReport rep = verify_terminal(r, i, o, mealy ? RelMode::Mealy : RelMode::Moore,
                                       limit);
  if (rep.ok) {
    out << "ok: terminal among " << rep.machinesSeen << " machines\n";
    return 0;
  }
  Json cex;
  cex["detail"] = rep.detail;
  return fail_with(out, "rel-terminal", cex, rdoc);
}

int cmd_cat_ran(const std::string& tFile, const std::string& oFile, std::ostream& out) {
  Document tdoc = load_document(tFile);
  if (!tdoc.holds<CatFunctor>()) throw TypeError("expected a functor document");
  Document odoc = load_document(oFile);
  if (!odoc.holds<SetFunctor>()) throw TypeError("expected a set-functor document");
  RanExtension ran = ran_along(tdoc.as<CatFunctor>(), odoc.as<SetFunctor>());
  emit(out, doc_json({Document::Kind::SetFunctorKind, ran.functor()}));
  return 0;
}

int cmd_cat_machine(const std::string& monadFile, const std::string& oFile,
                    std::ostream& out) {
  Document mdoc = load_document(monadFile);
  if (!mdoc.holds<MonadDocument>()) throw TypeError("expected a monad document");
  const MonadDocument& monadDoc = mdoc.as<MonadDocument>();
  Document odoc = load_document(oFile);
  if (!odoc.holds<SetFunctor>()) throw TypeError("expected a set-functor document");
  CatMonadCell monad{monadDoc.t, monadDoc.eta, monadDoc.mu};
  CatFunctor input = monadDoc.input ? *monadDoc.input : monadDoc.t;
  std::vector<int> kappa = monadDoc.input ? monadDoc.kappa : [&] {
    std::vector<int> ks(static_cast<size_t>(monadDoc.t.dom().objects().size()));
    for (int o = 0; o < monadDoc.t.dom().objects().size(); ++o) {
      ks[static_cast<size_t>(o)] = monadDoc.t.dom().id(monadDoc.t.obj(o));
    }
    return ks;
  }();
  MonadMachines mm = build_machine_from_monad(monad, odoc.as<SetFunctor>(), input, kappa);
  Json j;
  j["carrier"] = doc_json({Document::Kind::SetFunctorKind, mm.moore.e});
  j["sigma"] = nat_trans_tables(mm.moore.sigma);
  j["delta"] = nat_trans_tables(mm.moore.delta);
  j["sigma_mealy"] = nat_trans_tables(mm.mealy.sigma);
  emit(out, j);
  return 0;
}

int cmd_cat_verify_up(const std::string& tFile, const std::string& oFile,
                      const std::string& eFile, const std::string& gammaFile, int trials,
                      uint64_t seed, std::ostream& out) {
  Document tdoc = load_document(tFile);
  if (!tdoc.holds<CatFunctor>()) throw TypeError("expected a functor document");
  const CatFunctor& t = tdoc.as<CatFunctor>();
  Document odoc = load_document(oFile);
  if (!odoc.holds<SetFunctor>()) throw TypeError("expected a set-functor document");
  const SetFunctor& o = odoc.as<SetFunctor>();

  if (!eFile.empty()) {
    Document edoc = load_document(eFile);
    if (!edoc.holds<SetFunctor>()) throw TypeError("expected a set-functor document");
    const SetFunctor& e = edoc.as<SetFunctor>();
    SetFunctor et = precompose(e, t);
    std::ifstream g(gammaFile);
    if (!g) throw MalformedInputError("cannot open '" + gammaFile + "'");
    std::stringstream buf;
    buf << g.rdbuf();
    Json gj;
    try {
      gj = Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e2) {
      throw MalformedInputError(std::string("gamma file: ") + e2.what());
    }
    const FinCat& c = t.dom();
    std::vector<std::vector<int>> tables(static_cast<size_t>(c.objects().size()));
    for (int co = 0; co < c.objects().size(); ++co) {
      tables[static_cast<size_t>(co)].assign(static_cast<size_t>(et.at(co).size()), -1);
    }
    for (const auto& row : gj) {
      if (!row.is_array() || row.size() != 3) {
        throw MalformedInputError("gamma file: entries must be [object, element, value]");
      }
      int co = c.objects().index(row[0].get<std::string>());
      int x = et.at(co).index(row[1].get<std::string>());
      tables[static_cast<size_t>(co)][static_cast<size_t>(x)] =
          o.at(co).index(row[2].get<std::string>());
    }
    std::vector<FinFn> comps;
    for (int co = 0; co < c.objects().size(); ++co) {
      for (int v : tables[static_cast<size_t>(co)]) {
        if (v < 0) throw MalformedInputError("gamma file: table is not total");
      }
      comps.emplace_back(et.at(co), o.at(co), tables[static_cast<size_t>(co)]);
    }
    NatTrans gamma("gamma", et, o, std::move(comps));
    UpReport rep = check_ran_universal_property(t, o, e, gamma);
    if (rep.ok) {
      out << "ok: unique mediator\n";
      return 0;
    }
    Json cex;
    cex["mediators"] = rep.mediators;
    cex["detail"] = rep.detail;
    return fail_with(out, "ran-universal-property", cex, edoc);
  }

  Rng rng(seed);
  int done = 0, attempts = 0;
  while (done < trials && attempts < trials * 50) {
    ++attempts;
    auto e = try_random_set_functor(rng, t.dom(), 0, 2);
    if (!e) continue;
    SetFunctor et = precompose(*e, t);
    std::vector<NatTrans> gammas = enumerate_nat_trans(et, o);
    if (gammas.empty()) continue;
    const NatTrans& gamma =
        gammas[static_cast<size_t>(rng.uniform(static_cast<int>(gammas.size())))];
    UpReport rep = check_ran_universal_property(t, o, *e, gamma);
    if (!rep.ok) {
      Json cex;
      cex["trial"] = done;
      cex["mediators"] = rep.mediators;
      cex["detail"] = rep.detail;
      return fail_with(out, "ran-universal-property", cex, tdoc);
    }
    ++done;
  }
  if (done < trials) {
    throw ResourceError("could not draw enough universal-property instances");
  }
  out << "ok: unique mediator on " << done << " instances\n";
  return 0;
}

int cmd_intertwiner_check(const std::string& file, std::ostream& out) {
  Document doc = load_document(file);
  if (!doc.holds<Intertwiner>()) throw TypeError("expected an intertwiner document");
  IntertwinerReport r = check_intertwiner(doc.as<Intertwiner>());
  if (r.ok) {
    out << "ok: intertwiner\n";
    return 0;
  }
  const Intertwiner& it = doc.as<Intertwiner>();
  Json cex;
  cex["equation"] = std::string(1, r.equation);
  cex["state"] = it.dst.states().label(r.state);
  cex["letter"] = it.dst.input().label(r.letter);
  cex["u"] = it.u.label(r.uElem);
  cex["detail"] = r.detail;
  return fail_with(out, "intertwiner", cex, doc);
}

int cmd_intertwiner_compose(const std::string& file2, const std::string& file1,
                            std::ostream& out) {
  Document d2 = load_document(file2);
  Document d1 = load_document(file1);
  if (!d2.holds<Intertwiner>() || !d1.holds<Intertwiner>()) {
    throw TypeError("expected intertwiner documents");
  }
  Intertwiner pasted = compose_intertwiners(d2.as<Intertwiner>(), d1.as<Intertwiner>());
  emit(out, doc_json({Document::Kind::IntertwinerKind, pasted}));
  return 0;
}

int cmd_two_cell_check(const std::string& file, std::ostream& out) {
  Document doc = load_document(file);
  if (!doc.holds<IntertwinerTwoCell>()) throw TypeError("expected a two-cell document");
  TwoCellReport r = check_two_cell(doc.as<IntertwinerTwoCell>());
  if (r.ok) {
    out << "ok: 2-cell\n";
    return 0;
  }
  Json cex;
  cex["square"] = r.square;
  cex["detail"] = r.detail;
  return fail_with(out, "two-cell", cex, doc);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-model checker for transducer composition algebra"};
  app.require_subcommand(1);
  int exitCode = 0;

  // run
  auto* run = app.add_subcommand("run", "run a machine document on a word");
  std::string runFile, runWord, runState;
  run->add_option("file", runFile)->required();
  run->add_option("--word", runWord)->required();
  run->add_option("--state", runState);
  run->callback([&] { exitCode = cmd_run(runFile, runWord, runState, out); });

  // compose
  auto* comp = app.add_subcommand("compose", "diamond-compose two mealy documents");
  std::string compFile2, compFile1, compWord, compState;
  comp->add_option("second", compFile2, "machine applied second")->required();
  comp->add_option("first", compFile1, "machine applied first")->required();
  comp->add_option("--run", compWord, "run the composite on this word");
  comp->add_option("--state", compState);
  comp->callback([&] { exitCode = cmd_compose(compFile2, compFile1, compWord, compState, out); });

  // fugal
  auto* fugal = app.add_subcommand("fugal", "fugality checks and extensions");
  fugal->require_subcommand(1);
  auto* fugalCheck = fugal->add_subcommand("check", "decide fugality");
  std::string fugalFile;
  int fugalLen = 5;
  fugalCheck->add_option("file", fugalFile)->required();
  fugalCheck->add_option("--len", fugalLen, "word bound for free input monoids");
  fugalCheck->callback([&] { exitCode = cmd_fugal_check(fugalFile, fugalLen, out); });
  auto* fugalExtend = fugal->add_subcommand("extend", "fugal extension of a mealy machine");
  std::string extFile, extWord, extState;
  fugalExtend->add_option("file", extFile)->required();
  fugalExtend->add_option("--word", extWord);
  fugalExtend->add_option("--state", extState);
  fugalExtend->callback([&] { exitCode = cmd_fugal_extend(extFile, extWord, extState, out); });

  // adjunction
  auto* adj = app.add_subcommand("adjunction", "free/forgetful round trips");
  adj->require_subcommand(1);
  auto* roundtrip = adj->add_subcommand("roundtrip", "HK and KH round trips");
  std::vector<std::string> adjFiles;
  int adjLen = 5;
  roundtrip->add_option("files", adjFiles)->expected(1, 2);
  roundtrip->add_option("--len", adjLen);
  roundtrip->callback([&] { exitCode = cmd_adjunction(adjFiles, adjLen, out); });

  // guitart
  auto* gui = app.add_subcommand("guitart", "translation categories and spans");
  gui->require_subcommand(1);
  auto* guiTrans = gui->add_subcommand("translate", "translation category of an action");
  std::string guiFile;
  guiTrans->add_option("file", guiFile)->required();
  guiTrans->callback([&] { exitCode = cmd_guitart_translate(guiFile, out); });
  auto* guiSigma = gui->add_subcommand("sigma", "output functor of a fugal machine");
  std::string sigmaFile;
  guiSigma->add_option("file", sigmaFile)->required();
  guiSigma->callback([&] { exitCode = cmd_guitart_sigma(sigmaFile, out); });
  auto* guiComp = gui->add_subcommand("compose", "compose the translation spans of two "
                                                 "machines");
  std::string guiFile1, guiFile2;
  guiComp->add_option("first", guiFile1)->required();
  guiComp->add_option("second", guiFile2)->required();
  guiComp->callback([&] { exitCode = cmd_guitart_compose(guiFile1, guiFile2, out); });
  auto* guiVerify = gui->add_subcommand("verify", "pullback composite vs diamond composite");
  std::string verFile1, verFile2;
  guiVerify->add_option("first", verFile1)->required();
  guiVerify->add_option("second", verFile2)->required();
  guiVerify->callback([&] { exitCode = cmd_guitart_verify(verFile1, verFile2, out); });

  // kleisli
  auto* kl = app.add_subcommand("kleisli", "powerset-monad machines");
  kl->require_subcommand(1);
  auto* klLift = kl->add_subcommand("lift", "singleton-image lift");
  std::string liftFile;
  klLift->add_option("file", liftFile)->required();
  klLift->callback([&] { exitCode = cmd_kleisli_lift(liftFile, out); });
  auto* klExpand = kl->add_subcommand("expand", "powerset expansion");
  std::string expandFile;
  int expandLimit = 10;
  klExpand->add_option("file", expandFile)->required();
  klExpand->add_option("--limit", expandLimit, "max set size before refusing");
  klExpand->callback([&] { exitCode = cmd_kleisli_expand(expandFile, expandLimit, out); });
  auto* klRun = kl->add_subcommand("run", "subset-construction run");
  std::string klRunFile, klRunWord, klRunStart;
  klRun->add_option("file", klRunFile)->required();
  klRun->add_option("--word", klRunWord)->required();
  klRun->add_option("--start", klRunStart, "comma-separated start states");
  klRun->callback([&] { exitCode = cmd_kleisli_run(klRunFile, klRunWord, klRunStart, out); });

  // rel
  auto* rel = app.add_subcommand("rel", "relational machines and reachability");
  rel->require_subcommand(1);
  auto* relRan = rel->add_subcommand("ran", "reachability right extension");
  std::string relI, relO;
  bool relMoore = false, relMealy = false;
  relRan->add_option("input", relI, "endorelation document")->required();
  relRan->add_option("output", relO, "output relation document")->required();
  relRan->add_flag("--moore", relMoore);
  relRan->add_flag("--mealy", relMealy);
  relRan->callback([&] {
    if (relMoore == relMealy) throw UsageError("pass exactly one of --moore/--mealy");
    exitCode = cmd_rel_ran(relI, relO, relMealy, out);
  });
  auto* relVT = rel->add_subcommand("verify-terminal", "certify terminality");
  std::string vtR, vtI, vtO;
  bool vtMoore = false, vtMealy = false;
  int vtLimit = 14;
  relVT->add_option("candidate", vtR)->required();
  relVT->add_option("input", vtI)->required();
  relVT->add_option("output", vtO)->required();
  relVT->add_flag("--moore", vtMoore);
  relVT->add_flag("--mealy", vtMealy);
  relVT->add_option("--limit", vtLimit, "max |A|x|B| cells for full enumeration");
  relVT->callback([&] {
    if (vtMoore == vtMealy) throw UsageError("pass exactly one of --moore/--mealy");
    exitCode = cmd_rel_verify_terminal(vtR, vtI, vtO, vtMealy, vtLimit, out);
  });

  // cat
  auto* cat = app.add_subcommand("cat", "machines valued in functor categories");
  cat->require_subcommand(1);
  auto* catRan = cat->add_subcommand("ran", "pointwise right Kan extension");
  std::string catT, catO;
  catRan->add_option("endofunctor", catT)->required();
  catRan->add_option("output", catO)->required();
  catRan->callback([&] { exitCode = cmd_cat_ran(catT, catO, out); });
  auto* catMachine = cat->add_subcommand("machine", "terminal machine of a monad");
  std::string cmMonad, cmO;
  catMachine->add_option("monad", cmMonad)->required();
  catMachine->add_option("output", cmO)->required();
  catMachine->callback([&] { exitCode = cmd_cat_machine(cmMonad, cmO, out); });
  auto* catUp = cat->add_subcommand("verify-up", "right Kan extension universal property");
  std::string upT, upO, upE, upGamma;
  int upTrials = 20;
  uint64_t upSeed = 0;
  catUp->add_option("endofunctor", upT)->required();
  catUp->add_option("output", upO)->required();
  catUp->add_option("state", upE, "set-functor document (with --gamma)");
  catUp->add_option("--gamma", upGamma, "components E(Tc) -> O(c) as [obj, elem, value] "
                                        "triples");
  catUp->add_option("--trials", upTrials);
  catUp->add_option("--seed", upSeed);
  catUp->callback([&] {
    if (!upE.empty() && upGamma.empty()) {
      throw UsageError("a state functor needs --gamma");
    }
    exitCode = cmd_cat_verify_up(upT, upO, upE, upGamma, upTrials, upSeed, out);
  });

  // intertwiner
  auto* inter = app.add_subcommand("intertwiner", "intertwiners between machines");
  inter->require_subcommand(1);
  auto* interCheck = inter->add_subcommand("check", "check the interchange identities");
  std::string interFile;
  interCheck->add_option("file", interFile)->required();
  interCheck->callback([&] { exitCode = cmd_intertwiner_check(interFile, out); });
  auto* interComp = inter->add_subcommand("compose", "paste two intertwiners");
  std::string interFile2, interFile1;
  interComp->add_option("second", interFile2)->required();
  interComp->add_option("first", interFile1)->required();
  interComp->callback([&] { exitCode = cmd_intertwiner_compose(interFile2, interFile1, out); });
  auto* cellCheck = inter->add_subcommand("check-2cell", "check a 2-cell between "
                                                         "intertwiners");
  std::string cellFile;
  cellCheck->add_option("file", cellFile)->required();
  cellCheck->callback([&] { exitCode = cmd_two_cell_check(cellFile, out); });

  // laws
  auto* laws = app.add_subcommand("laws", "run the whole property suite");
  LawsOptions lawsOpts;
  laws->add_option("--seed", lawsOpts.seed);
  laws->add_option("--len", lawsOpts.len);
  laws->add_option("--limit", lawsOpts.limit);
  laws->add_option("--corpus", lawsOpts.corpusDir, "directory of documents to round-trip");
  laws->callback([&] {
    LawsReport rep = run_laws(lawsOpts, out);
    exitCode = rep.all_ok() ? 0 : 1;
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fugue");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnresolvedReference& e) {
    err << "unresolved reference: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}

} // namespace fugue::cli
