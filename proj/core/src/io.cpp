#include "esgames/io.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <nlohmann/json.hpp>
#include <sstream>

#include "esgames/errors.hpp"

namespace esgames {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kKindNames[] = {"event-structure", "group",     "action",           "law",
                                           "game",            "strategy",  "weak-map",         "uniform-strategy",
                                           "lift-witness",    "family",    "thin-game"};

}  // namespace

std::string_view to_string(DocKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<DocKind> parse_kind(std::string_view s) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i)
    if (kKindNames[i] == s) return static_cast<DocKind>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------- Bundle

const Document* Bundle::find(std::string_view id) const {
  for (const auto& d : docs_)
    if (d.id == id) return &d;
  return nullptr;
}

const Document& Bundle::at(std::string_view id, std::optional<DocKind> kind) const {
  const Document* d = find(id);
  if (!d) throw InputError("unresolved reference '" + std::string(id) + "'");
  if (kind && d->kind != *kind)
    throw InputError("'" + std::string(id) + "' is a " + std::string(to_string(d->kind)) + ", expected a " +
                     std::string(to_string(*kind)));
  return *d;
}

void Bundle::throw_kind_mismatch(const Document& d) {
  throw InputError("'" + d.id + "' has unexpected kind " + std::string(to_string(d.kind)));
}

void Bundle::push(Document d) {
  if (find(d.id)) throw InputError("duplicate document id '" + d.id + "'");
  docs_.push_back(std::move(d));
}

void Bundle::expect_fail(const std::string& id, std::vector<std::string> checks) {
  for (auto& d : docs_)
    if (d.id == id) {
      d.expect_fail = std::move(checks);
      return;
    }
  throw InputError("unresolved reference '" + id + "'");
}

std::string Bundle::fresh_id(const std::string& wanted) const {
  if (!find(wanted)) return wanted;
  for (int i = 2;; ++i) {
    std::string candidate = wanted + "~" + std::to_string(i);
    if (!find(candidate)) return candidate;
  }
}

template <class T>
std::optional<std::string> Bundle::existing(const T& value) const {
  for (const auto& d : docs_)
    if (auto p = std::get_if<std::shared_ptr<const T>>(&d.value))
      if (**p == value) return d.id;
  return std::nullopt;
}

namespace {

template <class T>
DocKind kind_of() {
  return static_cast<DocKind>(DocValue(std::shared_ptr<const T>{}).index());
}

}  // namespace

#define ESGAMES_ADD_PROLOGUE(T, value)                 \
  if (auto found = existing<T>(value)) return *found; \
  Document d{fresh_id(id), kind_of<T>(), {}, {}, {}};

std::string Bundle::add(const std::string& id, const EventStructurePtr& es) {
  ESGAMES_ADD_PROLOGUE(EventStructure, *es)
  d.value = es;
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const GroupPtr& group) {
  ESGAMES_ADD_PROLOGUE(FiniteGroup, *group)
  d.value = group;
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const GroupAction& action) {
  ESGAMES_ADD_PROLOGUE(GroupAction, action)
  d.refs["group"] = add(id + "/group", action.group);
  d.refs["target"] = add(id + "/target", action.target);
  d.value = share(action);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const DistributiveLaw& law) {
  ESGAMES_ADD_PROLOGUE(DistributiveLaw, law)
  d.refs["n_group"] = add(id + "/N", law.n_group);
  d.refs["p_group"] = add(id + "/P", law.p_group);
  d.value = share(law);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const GamePtr& game) {
  ESGAMES_ADD_PROLOGUE(Game, *game)
  d.refs["es"] = add(id + "/es", game->es);
  d.refs["n_action"] = add(id + "/N", game->n_action);
  d.refs["p_action"] = add(id + "/P", game->p_action);
  d.refs["law"] = add(id + "/law", game->law);
  d.value = game;
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const Strategy& s) {
  ESGAMES_ADD_PROLOGUE(Strategy, s)
  d.refs["game"] = add(id + "/game", s.game);
  d.refs["internal"] = add(id + "/internal", s.internal);
  d.value = share(s);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const WeakMap& w) {
  ESGAMES_ADD_PROLOGUE(WeakMap, w)
  d.refs["source"] = add(id + "/source", w.source);
  d.refs["target"] = add(id + "/target", w.target);
  d.value = share(w);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const UniformStrategy& u) {
  ESGAMES_ADD_PROLOGUE(UniformStrategy, u)
  d.refs["strategy"] = add(id + "/strategy", u.strategy);
  d.value = share(u);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const LiftWitness& w, LiftDirection direction) {
  const LiftDoc doc{w, direction};
  ESGAMES_ADD_PROLOGUE(LiftDoc, doc)
  d.refs["a"] = add(id + "/a", w.a);
  d.refs["b"] = add(id + "/b", w.b);
  d.value = share(doc);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const IsomorphismFamily& f) {
  ESGAMES_ADD_PROLOGUE(IsomorphismFamily, f)
  d.refs["es"] = add(id + "/es", f.es());
  d.value = share(f);
  docs_.push_back(d);
  return d.id;
}

std::string Bundle::add(const std::string& id, const ThinConcurrentGame& g) {
  ESGAMES_ADD_PROLOGUE(ThinConcurrentGame, g)
  d.refs["es"] = add(id + "/es", g.es);
  d.refs["full"] = add(id + "/full", g.full);
  d.refs["pos"] = add(id + "/pos", g.pos);
  d.refs["neg"] = add(id + "/neg", g.neg);
  d.value = share(g);
  docs_.push_back(d);
  return d.id;
}

#undef ESGAMES_ADD_PROLOGUE

// ---------------------------------------------------------------- writing

namespace {

json ids_of(const EventStructure& es, EventSet x) {
  json out = json::array();
  for (EventIndex e : x) out.push_back(es.id(e));
  return out;
}

json event_map_json(const EventStructure& source, const EventStructure& target, const EventMap& f) {
  json out = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) out[source.id(static_cast<EventIndex>(i))] = target.id(f[i]);
  return out;
}

json element_map_json(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Elem>& table) {
  json out = json::object();
  for (Elem a = 0; a < table.size(); ++a) out[from.name(a)] = to.name(table[a]);
  return out;
}

json body_of(const EventStructure& es) {
  json events = json::array();
  for (const auto& e : es.events()) {
    json ev{{"id", e.id}, {"polarity", std::string(1, sign(e.polarity))}};
    if (!e.label.empty()) ev["label"] = e.label;
    events.push_back(ev);
  }
  json covers = json::array();
  for (const auto& [a, b] : es.covers()) covers.push_back(json::array({es.id(a), es.id(b)}));
  json conflict = json::array();
  for (const auto& [a, b] : es.conflict_pairs()) conflict.push_back(json::array({es.id(a), es.id(b)}));
  return json{{"events", events}, {"covers", covers}, {"conflict", conflict}};
}

json body_of(const FiniteGroup& g) {
  json mul = json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    mul.push_back(row);
  }
  return json{{"elements", g.names()}, {"mul", mul}};
}

json body_of(const GroupAction& a) {
  json act = json::object();
  for (Elem g = 0; g < a.group->order(); ++g) act[a.group->name(g)] = event_map_json(*a.target, *a.target, a.act[g]);
  return json{{"act", act}};
}

json body_of(const DistributiveLaw& law) {
  json table = json::array();
  for (Elem a = 0; a < law.n_group->order(); ++a)
    for (Elem b = 0; b < law.p_group->order(); ++b) {
      const auto [b2, a2] = law(a, b);
      table.push_back(json::array(
          {law.n_group->name(a), law.p_group->name(b), law.p_group->name(b2), law.n_group->name(a2)}));
    }
  return json{{"table", table}};
}

json body_of(const Strategy& s) { return json{{"proj", event_map_json(*s.internal, *s.game->es, s.proj)}}; }

json body_of(const WeakMap& w) {
  const EventStructure& sigma = *w.source.internal;
  const FiniteGroup& p = w.source.game->p_group();
  json responses = json::array();
  const auto& configs = sigma.configurations();
  for (std::size_t xi = 0; xi < configs.size() && xi < w.responses.size(); ++xi)
    responses.push_back(json{{"config", ids_of(sigma, configs[xi])}, {"response", p.name(w.responses[xi])}});
  return json{{"map", event_map_json(sigma, *w.target.internal, w.f)}, {"responses", responses}};
}

json body_of(const UniformStrategy& u) {
  const EventStructure& sigma = *u.strategy.internal;
  const FiniteGroup& n = u.strategy.game->n_group();
  const FiniteGroup& p = u.strategy.game->p_group();
  const auto& configs = sigma.configurations();
  json phi = json::array();
  for (Elem a = 0; a < n.order(); ++a)
    for (std::size_t xi = 0; xi < configs.size(); ++xi) {
      const PhiEntry& e = u.at(a, xi);
      phi.push_back(json{{"element", n.name(a)},
                         {"config", ids_of(sigma, configs[xi])},
                         {"response", p.name(e.response)},
                         {"image", ids_of(sigma, configs[e.image])}});
    }
  return json{{"phi", phi}};
}

json body_of(const LiftDoc& doc) {
  const LiftWitness& w = doc.witness;
  const bool lift = doc.direction == LiftDirection::lift;
  const FiniteGroup& l_from = lift ? w.b->n_group() : w.b->p_group();
  const FiniteGroup& l_to = lift ? w.a->n_group() : w.a->p_group();
  const FiniteGroup& m_from = lift ? w.a->p_group() : w.a->n_group();
  const FiniteGroup& m_to = lift ? w.b->p_group() : w.b->n_group();
  return json{{"direction", lift ? "lift" : "colift"},
              {"map", event_map_json(*w.a->es, *w.b->es, w.map)},
              {"L", element_map_json(l_from, l_to, w.L)},
              {"M", element_map_json(m_from, m_to, w.M)}};
}

json body_of(const IsomorphismFamily& f) {
  const EventStructure& es = *f.es();
  json members = json::array();
  for (const auto& t : f.members()) {
    json graph = json::array();
    for (const auto& [a, b] : t.graph) graph.push_back(json::array({es.id(a), es.id(b)}));
    members.push_back(json{{"source", ids_of(es, t.source)}, {"target", ids_of(es, t.target)}, {"graph", graph}});
  }
  return json{{"members", members}};
}

json body_of(const Game&) { return json::object(); }
json body_of(const ThinConcurrentGame&) { return json::object(); }

}  // namespace

std::string dump_bundle(const Bundle& b) {
  json docs = json::array();
  for (const auto& d : b.documents()) {
    json doc{{"id", d.id}, {"kind", std::string(to_string(d.kind))}};
    json refs = json::object();
    for (const auto& [k, v] : d.refs) refs[k] = v;
    doc["refs"] = refs;
    if (!d.expect_fail.empty()) doc["expect_fail"] = d.expect_fail;
    doc["body"] = std::visit([](const auto& p) { return body_of(*p); }, d.value);
    docs.push_back(doc);
  }
  json out{{"schema_version", kSchemaVersion}, {"documents", docs}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------- reading

namespace {

class Loader {
 public:
  explicit Loader(const json& root) {
    if (!root.is_object() || !root.contains("documents") || !root["documents"].is_array())
      throw InputError("bundle must be an object with a 'documents' array");
    if (root.contains("schema_version") && root["schema_version"] != kSchemaVersion)
      throw InputError("unsupported schema_version " + root["schema_version"].dump());
    for (const auto& doc : root["documents"]) {
      if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string())
        throw InputError("every document needs a string 'id'");
      const std::string id = doc["id"].get<std::string>();
      if (raw_.count(id)) throw InputError("duplicate document id '" + id + "'");
      raw_.emplace(id, &doc);
      order_.push_back(id);
    }
  }

  Bundle run() {
    for (const auto& id : order_) resolve(id);
    Bundle b;
    for (const auto& id : order_) b.push(std::move(done_.at(id)));
    return b;
  }

 private:
  const Document& resolve(const std::string& id) {
    if (auto it = done_.find(id); it != done_.end()) return it->second;
    const auto raw = raw_.find(id);
    if (raw == raw_.end()) throw InputError("unresolved reference '" + id + "'");
    if (!visiting_.insert(id).second) throw InputError("cyclic reference through '" + id + "'");
    const json& doc = *raw->second;
    Document d;
    d.id = id;
    const auto kind = parse_kind(doc.value("kind", std::string()));
    if (!kind) throw InputError("document '" + id + "' has unknown kind " + doc.value("kind", json()).dump());
    d.kind = *kind;
    if (doc.contains("refs")) {
      if (!doc["refs"].is_object()) throw InputError("'" + id + "': refs must be an object");
      for (const auto& [k, v] : doc["refs"].items()) d.refs[k] = v.get<std::string>();
    }
    if (doc.contains("expect_fail")) d.expect_fail = doc["expect_fail"].get<std::vector<std::string>>();
    const json body = doc.value("body", json::object());
    try {
      d.value = build(d, body);
    } catch (const json::exception& e) {
      throw InputError("'" + id + "': " + e.what());
    }
    visiting_.erase(id);
    return done_.emplace(id, std::move(d)).first->second;
  }

  template <class T>
  std::shared_ptr<const T> ref(const Document& d, const std::string& name) {
    const auto it = d.refs.find(name);
    if (it == d.refs.end()) throw InputError("'" + d.id + "' is missing the reference '" + name + "'");
    const Document& target = resolve(it->second);
    if (auto p = std::get_if<std::shared_ptr<const T>>(&target.value)) return *p;
    throw InputError("'" + d.id + "': reference '" + name + "' points to a " +
                     std::string(to_string(target.kind)));
  }

  static EventIndex event(const EventStructure& es, const json& id) {
    const auto e = es.find(id.get<std::string>());
    if (!e) throw InputError("unknown event '" + id.get<std::string>() + "'");
    return *e;
  }

  static Elem element(const FiniteGroup& g, const json& name) {
    const auto e = g.find(name.get<std::string>());
    if (!e) throw InputError("unknown group element '" + name.get<std::string>() + "'");
    return *e;
  }

  static EventSet event_set(const EventStructure& es, const json& ids) {
    EventSet x;
    for (const auto& id : ids) x = x.with(event(es, id));
    return x;
  }

  static std::size_t config(const EventStructure& es, const json& ids) {
    const EventSet x = event_set(es, ids);
    const auto i = es.configuration_index(x);
    if (!i) throw InputError(format_set(es, x) + " is not a configuration");
    return *i;
  }

  static EventMap event_map(const EventStructure& source, const EventStructure& target, const json& obj) {
    if (!obj.is_object()) throw InputError("event map must be an object");
    EventMap f(source.size());
    std::vector<bool> seen(source.size(), false);
    for (const auto& [k, v] : obj.items()) {
      const EventIndex e = event(source, json(k));
      f[e] = event(target, v);
      seen[e] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw InputError("event map misses '" + source.id(static_cast<EventIndex>(i)) + "'");
    return f;
  }

  static std::vector<Elem> element_map(const FiniteGroup& from, const FiniteGroup& to, const json& obj) {
    std::vector<Elem> table(from.order());
    std::vector<bool> seen(from.order(), false);
    for (const auto& [k, v] : obj.items()) {
      const Elem a = element(from, json(k));
      table[a] = element(to, v);
      seen[a] = true;
    }
    for (Elem a = 0; a < from.order(); ++a)
      if (!seen[a]) throw InputError("element map misses '" + from.name(a) + "'");
    return table;
  }

  DocValue build(const Document& d, const json& body) {
    switch (d.kind) {
      case DocKind::event_structure: {
        std::vector<Event> events;
        for (const auto& e : body.at("events")) {
          const std::string pol = e.at("polarity").get<std::string>();
          if (pol != "+" && pol != "-") throw InputError("polarity must be '+' or '-'");
          events.push_back(Event{e.at("id").get<std::string>(),
                                 pol == "+" ? Polarity::positive : Polarity::negative, e.value("label", "")});
        }
        auto pairs = [&](const char* key) {
          std::vector<EventPair> out;
          if (!body.contains(key)) return out;
          std::map<std::string, EventIndex> index;
          for (std::size_t i = 0; i < events.size(); ++i) index[events[i].id] = static_cast<EventIndex>(i);
          for (const auto& p : body.at(key)) {
            const auto a = index.find(p.at(0).get<std::string>());
            const auto b = index.find(p.at(1).get<std::string>());
            if (a == index.end() || b == index.end()) throw InputError("unknown event in '" + std::string(key) + "'");
            out.emplace_back(a->second, b->second);
          }
          return out;
        };
        return share(EventStructure::from_covers(std::move(events), pairs("covers"), pairs("conflict")));
      }
      case DocKind::group: {
        const auto names = body.at("elements").get<std::vector<std::string>>();
        std::map<std::string, Elem> index;
        for (std::size_t i = 0; i < names.size(); ++i)
          if (!index.emplace(names[i], static_cast<Elem>(i)).second)
            throw InputError("duplicate group element '" + names[i] + "'");
        std::vector<Elem> mul;
        const json& rows = body.at("mul");
        if (rows.size() != names.size()) throw InputError("multiplication table has the wrong number of rows");
        for (const auto& row : rows) {
          if (row.size() != names.size()) throw InputError("multiplication table row has the wrong length");
          for (const auto& cell : row) {
            const auto it = index.find(cell.get<std::string>());
            if (it == index.end()) throw InputError("unknown group element '" + cell.get<std::string>() + "'");
            mul.push_back(it->second);
          }
        }
        return share(FiniteGroup::from_table(names, std::move(mul)));
      }
      case DocKind::action: {
        auto group = ref<FiniteGroup>(d, "group");
        auto target = ref<EventStructure>(d, "target");
        std::vector<EventMap> act(group->order());
        std::vector<bool> seen(group->order(), false);
        for (const auto& [k, v] : body.at("act").items()) {
          const Elem g = element(*group, json(k));
          act[g] = event_map(*target, *target, v);
          seen[g] = true;
        }
        for (Elem g = 0; g < group->order(); ++g)
          if (!seen[g]) throw InputError("action misses element '" + group->name(g) + "'");
        return share(GroupAction{group, target, std::move(act)});
      }
      case DocKind::law: {
        auto n = ref<FiniteGroup>(d, "n_group");
        auto p = ref<FiniteGroup>(d, "p_group");
        DistributiveLaw law{n, p, std::vector<std::pair<Elem, Elem>>(n->order() * p->order())};
        std::vector<bool> seen(law.table.size(), false);
        for (const auto& row : body.at("table")) {
          const Elem a = element(*n, row.at(0));
          const Elem b = element(*p, row.at(1));
          law.table[a * p->order() + b] = {element(*p, row.at(2)), element(*n, row.at(3))};
          seen[a * p->order() + b] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
          if (!seen[i]) throw InputError("law table misses an entry");
        return share(std::move(law));
      }
      case DocKind::game: {
        auto es = ref<EventStructure>(d, "es");
        auto n = ref<GroupAction>(d, "n_action");
        auto p = ref<GroupAction>(d, "p_action");
        auto law = ref<DistributiveLaw>(d, "law");
        return share(Game{es, *n, *p, *law});
      }
      case DocKind::strategy: {
        auto game = ref<Game>(d, "game");
        auto internal = ref<EventStructure>(d, "internal");
        return share(Strategy{internal, game, event_map(*internal, *game->es, body.at("proj"))});
      }
      case DocKind::weak_map: {
        auto source = ref<Strategy>(d, "source");
        auto target = ref<Strategy>(d, "target");
        const EventStructure& sigma = *source->internal;
        const FiniteGroup& p = source->game->p_group();
        std::vector<Elem> responses(sigma.configurations().size(), static_cast<Elem>(p.order()));
        for (const auto& entry : body.at("responses"))
          responses[config(sigma, entry.at("config"))] = element(p, entry.at("response"));
        return share(WeakMap{*source, *target, event_map(sigma, *target->internal, body.at("map")),
                             std::move(responses)});
      }
      case DocKind::uniform_strategy: {
        auto s = ref<Strategy>(d, "strategy");
        const EventStructure& sigma = *s->internal;
        const FiniteGroup& n = s->game->n_group();
        const FiniteGroup& p = s->game->p_group();
        const std::size_t c = sigma.configurations().size();
        UniformStrategy u{*s, std::vector<PhiEntry>(n.order() * c, PhiEntry{static_cast<Elem>(p.order()), 0})};
        for (const auto& entry : body.at("phi")) {
          const Elem a = element(n, entry.at("element"));
          u.phi[a * c + config(sigma, entry.at("config"))] = {
              element(p, entry.at("response")), static_cast<std::uint32_t>(config(sigma, entry.at("image")))};
        }
        return share(std::move(u));
      }
      case DocKind::lift_witness: {
        auto a = ref<Game>(d, "a");
        auto b = ref<Game>(d, "b");
        const std::string dir = body.value("direction", "lift");
        if (dir != "lift" && dir != "colift") throw InputError("direction must be 'lift' or 'colift'");
        const bool lift = dir == "lift";
        LiftWitness w{a, b, event_map(*a->es, *b->es, body.at("map")),
                      element_map(lift ? b->n_group() : b->p_group(), lift ? a->n_group() : a->p_group(), body.at("L")),
                      element_map(lift ? a->p_group() : a->n_group(), lift ? b->p_group() : b->n_group(), body.at("M"))};
        return share(LiftDoc{std::move(w), lift ? LiftDirection::lift : LiftDirection::colift});
      }
      case DocKind::family: {
        auto es = ref<EventStructure>(d, "es");
        std::vector<ConfigBijection> members;
        for (const auto& m : body.at("members")) {
          ConfigBijection t{event_set(*es, m.at("source")), event_set(*es, m.at("target")), {}};
          for (const auto& p : m.at("graph")) t.graph.emplace_back(event(*es, p.at(0)), event(*es, p.at(1)));
          std::sort(t.graph.begin(), t.graph.end());
          members.push_back(std::move(t));
        }
        return share(IsomorphismFamily(es, std::move(members)));
      }
      case DocKind::thin_game: {
        auto es = ref<EventStructure>(d, "es");
        auto full = ref<IsomorphismFamily>(d, "full");
        auto pos = ref<IsomorphismFamily>(d, "pos");
        auto neg = ref<IsomorphismFamily>(d, "neg");
        return share(ThinConcurrentGame{es, *full, *pos, *neg});
      }
    }
    throw InputError("unhandled document kind");
  }

  std::map<std::string, const json*> raw_;
  std::vector<std::string> order_;
  std::map<std::string, Document> done_;
  std::set<std::string> visiting_;
};

}  // namespace

Bundle parse_bundle(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return Loader(root).run();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

Bundle load_bundle_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

}  // namespace esgames
