#include "covlab/io.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <tuple>

namespace covlab::io {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void schema(const std::string& field) { throw Error(ErrorKind::SchemaError, field); }

const json& field(const json& obj, const std::string& name) {
  if (!obj.is_object() || !obj.contains(name)) schema(name);
  return obj.at(name);
}

int as_int(const json& j, const std::string& name) {
  if (!j.is_number_integer()) schema(name);
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& name) {
  if (!j.is_string()) schema(name);
  return j.get<std::string>();
}

std::vector<int> int_list(const json& j, const std::string& name) {
  if (!j.is_array()) schema(name);
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, name));
  return out;
}

const json& section(const json& root, const char* name) {
  static const json empty = json::object();
  if (!root.contains(name)) return empty;
  const auto& s = root.at(name);
  if (!s.is_object()) schema(name);
  return s;
}

struct Resolver {
  const Document& doc;

  // Group plus relabeling; built-ins need none.
  std::pair<fingroup::GroupTable, LoadedGroup> group(const json& ref, const std::string& name) const {
    std::string id = as_string(ref, name);
    if (auto it = doc.groups.find(id); it != doc.groups.end()) return {it->second.table, it->second};
    auto g = fingroup::named_group(id);
    if (!g) schema(name);
    return {*g, LoadedGroup{*g, 0}};
  }

  int element(const LoadedGroup& g, const json& j, const std::string& name) const {
    int x = as_int(j, name);
    if (x < 0 || x >= g.table.order()) schema(name);
    return g.relabel(x);
  }

  std::vector<int> elements(const LoadedGroup& g, const json& j, const std::string& name) const {
    if (!j.is_array()) schema(name);
    std::vector<int> out;
    for (const auto& x : j) out.push_back(element(g, x, name));
    return out;
  }

  // Reorders a per-element list given in the file's labeling.
  template <class T>
  std::vector<T> per_element(const LoadedGroup& g, std::vector<T> items) const {
    std::vector<T> out = items;
    for (int x = 0; x < static_cast<int>(items.size()); ++x) out[idx(g.relabel(x))] = items[idx(x)];
    return out;
  }
};

mpq_class rational(const json& j, const std::string& name) {
  try {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
      mpq_class q(j.get<std::string>());
      if (q.get_den() == 0) schema(name);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    schema(name);
  }
  schema(name);
}

mpq_class fraction(const json& num, const json& den, const std::string& name) {
  mpq_class n = rational(num, name), d = rational(den, name);
  if (d == 0) schema(name);
  return n / d;
}

linalg::Scalar scalar(const json& j, const std::string& name) {
  if (j.is_array()) {
    if (j.size() == 2) return {fraction(j[0], j[1], name), 0};
    if (j.size() == 4) return {fraction(j[0], j[1], name), fraction(j[2], j[3], name)};
    schema(name);
  }
  return {rational(j, name), 0};
}

// Either a list of rows or, with known shape, a flat row-major entry list.
// Entries are numbers, strings or arrays of length 2 or 4, so a length-1
// array is always a row.
linalg::Matrix matrix(const json& j, const std::string& name, int rows = -1, int cols = -1) {
  if (!j.is_array()) schema(name);
  const int size = static_cast<int>(j.size());
  bool flat = rows >= 0 && size == rows * cols && size != rows;
  if (rows >= 0 && size == rows * cols && size == rows) flat = !(j[0].is_array() && j[0].size() == 1);
  if (!flat) {
    std::vector<std::vector<linalg::Scalar>> data;
    for (const auto& row : j) {
      if (!row.is_array()) schema(name);
      std::vector<linalg::Scalar> r;
      for (const auto& e : row) r.push_back(scalar(e, name));
      if (!data.empty() && r.size() != data[0].size()) schema(name);
      data.push_back(std::move(r));
    }
    auto m = linalg::Matrix::from_rows(data);
    if ((rows >= 0 && m.rows() != rows) || (cols >= 0 && m.cols() != cols)) schema(name);
    return m;
  }
  linalg::Matrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.at(i / cols, i % cols) = scalar(j[idx(i)], name);
  return m;
}

void load_groups(Document& doc, const json& root) {
  for (const auto& [id, rec] : section(root, "groups").items()) {
    if (rec.is_string()) {
      auto g = fingroup::named_group(rec.get<std::string>());
      if (!g) schema("groups");
      doc.groups[id] = {*g, 0};
      continue;
    }
    const auto& t = field(rec, "table");
    if (!t.is_array()) schema("table");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) table.push_back(int_list(row, "table"));
    if (rec.contains("order") && as_int(rec["order"], "order") != static_cast<int>(table.size())) schema("order");
    int e = 0;
    for (std::size_t a = 0; a < table.size(); ++a) {
      bool ident = table[a].size() == table.size();
      for (std::size_t b = 0; ident && b < table.size(); ++b) ident = table[a][b] == static_cast<int>(b);
      if (ident) {
        e = static_cast<int>(a);
        break;
      }
    }
    std::string name = rec.contains("name") ? as_string(rec["name"], "name") : id;
    doc.groups[id] = {fingroup::make_group(table, name), e};
  }
}

void load_categories(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "categories").items()) {
    if (rec.contains("group")) {
      doc.categories[id] = std::make_shared<const covariance::FinCat>(covariance::group_category(r.group(rec["group"], "group").first));
      continue;
    }
    auto strings = [](const json& j, const std::string& name) {
      if (!j.is_array()) schema(name);
      std::vector<std::string> out;
      for (const auto& x : j) out.push_back(as_string(x, name));
      return out;
    };
    auto triples = [&](const json& j, const std::string& name) {
      if (!j.is_array()) schema(name);
      std::vector<std::array<std::string, 3>> out;
      for (const auto& x : j) {
        auto s = strings(x, name);
        if (s.size() != 3) schema(name);
        out.push_back({s[0], s[1], s[2]});
      }
      return out;
    };
    auto cat = covariance::make_fincat(strings(field(rec, "objects"), "objects"),
                                       triples(field(rec, "morphisms"), "morphisms"),
                                       triples(field(rec, "composites"), "composites"),
                                       strings(field(rec, "identities"), "identities"));
    auto v = covariance::validate_fincat(cat);
    if (!v) throw Error(ErrorKind::InvalidCategory, v.violation, v.witness);
    doc.categories[id] = std::make_shared<const covariance::FinCat>(std::move(cat));
  }
}

std::shared_ptr<const covariance::FinCat> category_ref(const Document& doc, const json& j, const std::string& name) {
  auto it = doc.categories.find(as_string(j, name));
  if (it == doc.categories.end()) schema(name);
  return it->second;
}

void load_cochains(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "cochains").items()) {
    auto [g, lg] = r.group(field(rec, "G"), "G");
    auto [a, la] = r.group(field(rec, "A"), "A");
    auto coeff = cohomology::make_coefficients(a);
    auto c = cohomology::trivial_cochain(g, coeff);
    const int n = g.order();
    const auto& xi = field(rec, "xi");
    if (!xi.is_array() || static_cast<int>(xi.size()) != n) schema("xi");
    for (int i = 0; i < n; ++i) {
      auto row = r.elements(la, xi[idx(i)], "xi");
      if (static_cast<int>(row.size()) != n) schema("xi");
      for (int j = 0; j < n; ++j) c.xi[idx(lg.relabel(i) * n + lg.relabel(j))] = row[idx(j)];
    }
    if (rec.contains("phi")) {
      const auto& phi = rec["phi"];
      if (!phi.is_array() || static_cast<int>(phi.size()) != n) schema("phi");
      for (int i = 0; i < n; ++i) {
        auto images = r.elements(la, phi[idx(i)], "phi");
        if (static_cast<int>(images.size()) != a.order()) schema("phi");
        fingroup::Perm p(idx(a.order()));
        for (int x = 0; x < a.order(); ++x) p[idx(la.relabel(x))] = images[idx(x)];
        auto index = coeff->aut.index_of(p);
        if (!index) throw Error(ErrorKind::InvalidCocycle, "phi(g) is not an automorphism", {lg.relabel(i)});
        c.phi[idx(lg.relabel(i))] = *index;
      }
    }
    doc.cochains[id] = std::move(c);
    doc.cochain_groups[id] = lg;
  }
}

void load_reps(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "reps").items()) {
    auto [g, lg] = r.group(field(rec, "group"), "group");
    int dim = as_int(field(rec, "dim"), "dim");
    if (dim <= 0) schema("dim");
    const auto& ms = field(rec, "matrices");
    if (!ms.is_array() || static_cast<int>(ms.size()) != g.order()) schema("matrices");
    std::vector<linalg::Matrix> mats;
    for (const auto& m : ms) mats.push_back(matrix(m, "matrices", dim, dim));
    doc.reps[id] = {g, dim, r.per_element(lg, mats)};
  }
}

void load_covers(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "covers").items()) {
    auto [s, ls] = r.group(field(rec, "S"), "S");
    auto [l, ll] = r.group(field(rec, "L"), "L");
    auto pi = r.per_element(ls, r.elements(ll, field(rec, "pi"), "pi"));
    if (static_cast<int>(pi.size()) != s.order()) schema("pi");
    doc.covers[id] = covering::make_cover(s, l, pi, id);
    doc.cover_groups[id] = {ls, ll};
  }
}

const covering::CentralCover* cover_ref(const Document& doc, const std::string& ref, covering::CentralCover& storage) {
  if (auto it = doc.covers.find(ref); it != doc.covers.end()) return &it->second;
  auto c = covering::named_cover(ref);
  if (!c) return nullptr;
  storage = std::move(*c);
  return &storage;
}

void load_sections(Document& doc, const json& root) {
  for (const auto& [id, rec] : section(root, "sections").items()) {
    std::string ref = as_string(field(rec, "cover"), "cover");
    covering::CentralCover storage;
    const auto* c = cover_ref(doc, ref, storage);
    if (!c) schema("cover");
    LoadedGroup ls{c->S, 0}, ll{c->L, 0};
    if (auto it = doc.cover_groups.find(ref); it != doc.cover_groups.end()) std::tie(ls, ll) = it->second;
    Resolver r{doc};
    auto lift = r.per_element(ll, r.elements(ls, field(rec, "lift"), "lift"));
    doc.sections[id] = {ref, {lift}};
  }
}

std::vector<int> names_to_indices(const json& j, const std::string& name,
                                  const std::function<std::optional<int>(const std::string&)>& lookup) {
  if (!j.is_array()) schema(name);
  std::vector<int> out;
  for (const auto& x : j) {
    auto v = lookup(as_string(x, name));
    if (!v) schema(name);
    out.push_back(*v);
  }
  return out;
}

void load_models(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "models").items()) {
    auto source = category_ref(doc, field(rec, "source"), "source");
    auto target = category_ref(doc, field(rec, "target"), "target");
    auto [g, lg] = r.group(field(rec, "group"), "group");
    covariance::CovarianceModel m;
    m.name = id;
    m.functor.source = source;
    m.functor.target = target;
    auto obj = [&](const std::shared_ptr<const covariance::FinCat>& c) {
      return [c](const std::string& s) { return c->find_object(s); };
    };
    auto mor = [&](const std::shared_ptr<const covariance::FinCat>& c) {
      return [c](const std::string& s) { return c->find_morphism(s); };
    };
    const auto& fo = field(rec, "objects");
    const auto& fm = field(rec, "morphisms");
    if (!fo.is_object() || !fm.is_object()) schema(fo.is_object() ? "morphisms" : "objects");
    for (const auto& name : source->objects) {
      if (!fo.contains(name)) schema("objects");
      auto t = target->find_object(as_string(fo[name], "objects"));
      if (!t) schema("objects");
      m.functor.objects.push_back(*t);
    }
    for (const auto& mo : source->morphisms) {
      if (!fm.contains(mo.id)) schema("morphisms");
      auto t = target->find_morphism(as_string(fm[mo.id], "morphisms"));
      if (!t) schema("morphisms");
      m.functor.morphisms.push_back(*t);
    }
    auto fv = covariance::validate_functor(m.functor);
    if (!fv) throw Error(ErrorKind::InvalidFunctor, fv.violation, fv.witness);
    if (rec.contains("action")) {
      const auto& act = rec["action"];
      const auto& ao = field(act, "objects");
      const auto& am = field(act, "morphisms");
      if (!ao.is_array() || static_cast<int>(ao.size()) != g.order()) schema("objects");
      if (!am.is_array() || static_cast<int>(am.size()) != g.order()) schema("morphisms");
      std::vector<std::vector<int>> objs, mors;
      for (int x = 0; x < g.order(); ++x) {
        objs.push_back(names_to_indices(ao[idx(x)], "objects", obj(source)));
        mors.push_back(names_to_indices(am[idx(x)], "morphisms", mor(source)));
      }
      m.action = {g, source, r.per_element(lg, objs), r.per_element(lg, mors)};
      auto av = covariance::validate_gaction(m.action);
      if (!av) throw Error(ErrorKind::InvalidAction, av.violation, av.witness);
    } else {
      m.action = covariance::trivial_action(g, source);
    }
    doc.models[id] = std::move(m);
    doc.model_groups[id] = lg;
  }
}

void load_implementations(Document& doc, const json& root) {
  for (const auto& [id, rec] : section(root, "implementations").items()) {
    std::string model = as_string(field(rec, "model"), "model");
    auto it = doc.models.find(model);
    if (it == doc.models.end()) schema("model");
    const auto& m = it->second;
    const auto& target = m.functor.target;
    const auto& eta = field(rec, "eta");
    const int n = m.action.G.order();
    if (!eta.is_array() || static_cast<int>(eta.size()) != n) schema("eta");
    std::vector<std::vector<int>> rows;
    for (const auto& row : eta) {
      auto v = names_to_indices(row, "eta", [&](const std::string& s) { return target->find_morphism(s); });
      if (static_cast<int>(v.size()) != m.functor.source->num_objects()) schema("eta");
      rows.push_back(std::move(v));
    }
    doc.implementations[id] = {model, {Resolver{doc}.per_element(doc.model_groups.at(model), rows)}};
  }
}

void load_field_actions(Document& doc, const json& root) {
  Resolver r{doc};
  for (const auto& [id, rec] : section(root, "field_actions").items()) {
    auto cit = doc.cochains.find(as_string(field(rec, "cochain"), "cochain"));
    if (cit == doc.cochains.end()) schema("cochain");
    auto rit = doc.reps.find(as_string(field(rec, "dot"), "dot"));
    if (rit == doc.reps.end()) schema("dot");
    if (!(rit->second.group == cit->second.coeff())) schema("dot");
    const auto& star = field(rec, "star");
    const int n = cit->second.G.order();
    if (!star.is_array() || static_cast<int>(star.size()) != n) schema("star");
    std::vector<linalg::Matrix> mats;
    for (const auto& m : star) mats.push_back(matrix(m, "star", rit->second.dim, rit->second.dim));
    doc.field_actions[id] = {cit->second, rit->second, r.per_element(doc.cochain_groups.at(cit->first), mats)};
  }
}

void load_submultiplets(Document& doc, const json& root) {
  for (const auto& [id, rec] : section(root, "submultiplets").items()) {
    auto iota = matrix(field(rec, "iota"), "iota");
    auto pi = matrix(field(rec, "pi"), "pi");
    doc.submultiplets[id] = {iota, pi};
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    std::size_t end = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col), {line, col});
  }
  if (!root.is_object()) schema("document");
  Document doc;
  doc.digest = fnv1a_hex(text);
  load_groups(doc, root);
  load_categories(doc, root);
  load_cochains(doc, root);
  load_reps(doc, root);
  load_covers(doc, root);
  load_sections(doc, root);
  load_models(doc, root);
  load_implementations(doc, root);
  load_field_actions(doc, root);
  load_submultiplets(doc, root);
  return doc;
}

Document load_document(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::SchemaError, "input");
    buf << in.rdbuf();
  }
  return parse_document(buf.str());
}

std::optional<fingroup::GroupTable> resolve_group(const Document& doc, const std::string& ref) {
  if (auto it = doc.groups.find(ref); it != doc.groups.end()) return it->second.table;
  return fingroup::named_group(ref);
}

json group_json(const fingroup::GroupTable& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"table", g.rows()}};
}

json cochain_json(const cohomology::Cochain2& c) {
  const int n = c.G.order();
  json xi = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(c.xi_at(i, j));
    xi.push_back(row);
  }
  json phi = json::array();
  for (int g = 0; g < n; ++g) phi.push_back(c.phi_at(g));
  return {{"G", c.G.name()}, {"A", c.coeff().name()}, {"xi", xi}, {"phi", phi}};
}

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

json scalar_json(const linalg::Scalar& s) {
  if (s.is_real()) return {integer_json(s.re.get_num()), integer_json(s.re.get_den())};
  return {integer_json(s.re.get_num()), integer_json(s.re.get_den()), integer_json(s.im.get_num()),
          integer_json(s.im.get_den())};
}

json matrix_json(const linalg::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json rep_json(const multiplet::MatrixRep& r) {
  json mats = json::array();
  for (const auto& m : r.matrices) mats.push_back(matrix_json(m));
  return {{"group", r.group.name()}, {"dim", r.dim}, {"matrices", mats}};
}

json verdict_json(const Verdict& v) {
  json j = {{"ok", v.ok}};
  if (!v.ok) {
    j["violation"] = v.violation;
    j["witness"] = v.witness;
  }
  return j;
}

json wick_json(const wick::WickPoly& p) { return p.to_string(); }

}  // namespace covlab::io
