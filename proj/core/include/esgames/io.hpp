#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "esgames/copycat.hpp"
#include "esgames/tcg.hpp"

namespace esgames {

inline constexpr int kSchemaVersion = 1;

enum class DocKind {
  event_structure,
  group,
  action,
  law,
  game,
  strategy,
  weak_map,
  uniform_strategy,
  lift_witness,
  family,
  thin_game,
};

std::string_view to_string(DocKind k);
std::optional<DocKind> parse_kind(std::string_view s);

enum class LiftDirection { lift, colift };

struct LiftDoc {
  LiftWitness witness;
  LiftDirection direction = LiftDirection::lift;

  friend bool operator==(const LiftDoc&, const LiftDoc&) = default;
};

/// Alternatives are in DocKind order.
using DocValue =
    std::variant<EventStructurePtr, GroupPtr, std::shared_ptr<const GroupAction>,
                 std::shared_ptr<const DistributiveLaw>, GamePtr, std::shared_ptr<const Strategy>,
                 std::shared_ptr<const WeakMap>, std::shared_ptr<const UniformStrategy>,
                 std::shared_ptr<const LiftDoc>, std::shared_ptr<const IsomorphismFamily>,
                 std::shared_ptr<const ThinConcurrentGame>>;

struct Document {
  std::string id;
  DocKind kind;
  DocValue value;
  /// Named references to other documents of the bundle.
  std::map<std::string, std::string> refs;
  /// Checks of this document's suite that are expected to fail.
  std::vector<std::string> expect_fail;
};

/// An ordered set of documents, each referring only to earlier ones.
///
/// The add functions register an object together with everything it refers
/// to and return its id. Structurally equal objects are stored once; adding
/// an equal object again returns the existing id.
class Bundle {
 public:
  std::string add(const std::string& id, const EventStructurePtr& es);
  std::string add(const std::string& id, const GroupPtr& group);
  std::string add(const std::string& id, const GroupAction& action);
  std::string add(const std::string& id, const DistributiveLaw& law);
  std::string add(const std::string& id, const GamePtr& game);
  std::string add(const std::string& id, const Strategy& s);
  std::string add(const std::string& id, const WeakMap& w);
  std::string add(const std::string& id, const UniformStrategy& u);
  std::string add(const std::string& id, const LiftWitness& w, LiftDirection direction);
  std::string add(const std::string& id, const IsomorphismFamily& f);
  std::string add(const std::string& id, const ThinConcurrentGame& g);

  /// Tags a document with checks that must fail. Throws InputError for
  /// unknown ids.
  void expect_fail(const std::string& id, std::vector<std::string> checks);

  const std::vector<Document>& documents() const { return docs_; }
  const Document* find(std::string_view id) const;
  /// Throws InputError when the id is missing or has another kind.
  const Document& at(std::string_view id, std::optional<DocKind> kind = std::nullopt) const;

  template <class T>
  std::shared_ptr<const T> get(std::string_view id) const {
    const Document& d = at(id);
    if (auto p = std::get_if<std::shared_ptr<const T>>(&d.value)) return *p;
    throw_kind_mismatch(d);
  }

  /// Appends a loaded document; used by the parser.
  void push(Document d);

 private:
  [[noreturn]] static void throw_kind_mismatch(const Document& d);
  std::string fresh_id(const std::string& wanted) const;
  template <class T>
  std::optional<std::string> existing(const T& value) const;

  std::vector<Document> docs_;
};

/// Parses a bundle. Throws InputError on malformed JSON, unknown kinds,
/// unresolved or cyclic references and names that do not resolve.
Bundle parse_bundle(std::string_view text);
Bundle load_bundle_file(const std::string& path);
/// Deterministic JSON text with a fixed field order.
std::string dump_bundle(const Bundle& b);

}  // namespace esgames
