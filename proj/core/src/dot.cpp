#include "esgames/dot.hpp"

#include <sstream>

#include "esgames/errors.hpp"

namespace esgames {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string default_label(const Event& e) { return e.label.empty() ? std::string(1, sign(e.polarity)) + e.id : e.label; }

struct Drawable {
  EventStructurePtr es;
  std::vector<std::string> labels;
};

Drawable drawable(const EventStructurePtr& es) {
  Drawable d{es, {}};
  for (const auto& e : es->events()) d.labels.push_back(default_label(e));
  return d;
}

Drawable drawable(const Strategy& s) {
  Drawable d{s.internal, {}};
  const EventStructure& game = *s.game->es;
  for (std::size_t i = 0; i < s.internal->size(); ++i) {
    const Event& e = s.internal->event(static_cast<EventIndex>(i));
    d.labels.push_back(e.label.empty() && i < s.proj.size() && s.proj[i] < game.size()
                           ? default_label(game.event(s.proj[i]))
                           : default_label(e));
  }
  return d;
}

Drawable drawable_of(const Document& doc) {
  return std::visit(
      [&](const auto& p) -> Drawable {
        using T = std::remove_const_t<typename std::decay_t<decltype(p)>::element_type>;
        if constexpr (std::is_same_v<T, EventStructure>) return drawable(p);
        else if constexpr (std::is_same_v<T, Game>) return drawable(p->es);
        else if constexpr (std::is_same_v<T, Strategy>) return drawable(*p);
        else if constexpr (std::is_same_v<T, UniformStrategy>) return drawable(p->strategy);
        else if constexpr (std::is_same_v<T, WeakMap>) return drawable(p->source);
        else if constexpr (std::is_same_v<T, GroupAction>) return drawable(p->target);
        else if constexpr (std::is_same_v<T, IsomorphismFamily>) return drawable(p->es());
        else if constexpr (std::is_same_v<T, ThinConcurrentGame>) return drawable(p->es);
        else if constexpr (std::is_same_v<T, LiftDoc>) return drawable(p->witness.a->es);
        else
          throw InputError("a " + std::string(to_string(doc.kind)) + " document has no events to draw");
      },
      doc.value);
}

std::optional<IsomorphismFamily> family_of(const Document& doc) {
  return std::visit(
      [&](const auto& p) -> std::optional<IsomorphismFamily> {
        using T = std::remove_const_t<typename std::decay_t<decltype(p)>::element_type>;
        if constexpr (std::is_same_v<T, IsomorphismFamily>) return *p;
        else if constexpr (std::is_same_v<T, ThinConcurrentGame>) return p->full;
        else if constexpr (std::is_same_v<T, Game>) return tcg_from_game(*p).full;
        else if constexpr (std::is_same_v<T, GroupAction>) return family_from_action(*p);
        else if constexpr (std::is_same_v<T, UniformStrategy>) return family_from_uniform(*p);
        else return std::nullopt;
      },
      doc.value);
}

void nodes(std::ostream& os, const Drawable& d) {
  for (std::size_t i = 0; i < d.es->size(); ++i) {
    const Event& e = d.es->event(static_cast<EventIndex>(i));
    os << "  " << quote(e.id) << " [label=" << quote(d.labels[i])
       << (e.polarity == Polarity::negative ? ", shape=circle" : ", shape=doublecircle") << "];\n";
  }
}

void covers(std::ostream& os, const EventStructure& es) {
  for (const auto& [a, b] : es.covers()) os << "  " << quote(es.id(a)) << " -> " << quote(es.id(b)) << ";\n";
}

// a # b is minimal when no strict predecessors of a or b already clash.
bool minimal_conflict(const EventStructure& es, EventIndex a, EventIndex b) {
  for (EventIndex c : es.predecessors(a))
    if (es.in_conflict(c, b)) return false;
  for (EventIndex c : es.predecessors(b))
    if (es.in_conflict(a, c)) return false;
  return true;
}

}  // namespace

std::optional<DotView> parse_view(std::string_view s) {
  if (s == "causality") return DotView::causality;
  if (s == "conflict") return DotView::conflict;
  if (s == "family") return DotView::family;
  return std::nullopt;
}

std::string export_dot(const Document& doc, DotView view) {
  std::ostringstream os;
  os << "digraph " << quote(doc.id) << " {\n";
  if (view == DotView::family) {
    const auto family = family_of(doc);
    if (!family) throw InputError("a " + std::string(to_string(doc.kind)) + " document carries no family");
    const EventStructure& es = *family->es();
    const Drawable d = drawable(family->es());
    std::size_t k = 0;
    for (const auto& t : family->members()) {
      if (t.is_identity()) continue;
      os << "  subgraph cluster_" << k << " {\n";
      os << "    label=" << quote(format_bijection(es, t)) << ";\n";
      for (const auto& [a, b] : t.graph) {
        const std::string left = "m" + std::to_string(k) + "s:" + es.id(a);
        const std::string right = "m" + std::to_string(k) + "t:" + es.id(b);
        os << "    " << quote(left) << " [label=" << quote(d.labels[a]) << "];\n";
        os << "    " << quote(right) << " [label=" << quote(d.labels[b]) << "];\n";
        os << "    " << quote(left) << " -> " << quote(right) << ";\n";
      }
      os << "  }\n";
      ++k;
    }
  } else {
    const Drawable d = drawable_of(doc);
    nodes(os, d);
    covers(os, *d.es);
    if (view == DotView::conflict)
      for (const auto& [a, b] : d.es->conflict_pairs())
        if (minimal_conflict(*d.es, a, b))
          os << "  " << quote(d.es->id(a)) << " -> " << quote(d.es->id(b)) << " [dir=none, style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace esgames
