#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace webtrace {

// The fixed alphabet of vertex types for a family of webs: each type has a
// name and in/out arities. Signatures are immutable and shared by the webs,
// tensors-with-representations, and packs built over them.
class TypeSignature {
 public:
  struct Type {
    std::string name;
    int in_arity = 0;
    int out_arity = 0;

    friend bool operator==(const Type&, const Type&) = default;
  };

  // Validates names (nonempty, unique, free of whitespace and of the text
  // format's punctuation "(),:" ) and arities (>= 0).
  static std::shared_ptr<const TypeSignature> make(std::vector<Type> types);

  int count() const { return static_cast<int>(types_.size()); }
  const Type& type(int index) const { return types_.at(index); }
  const std::vector<Type>& types() const { return types_; }

  // -1 when absent.
  int index_of(std::string_view name) const;

  friend bool operator==(const TypeSignature& a, const TypeSignature& b) {
    return a.types_ == b.types_;
  }

 private:
  explicit TypeSignature(std::vector<Type> types) : types_(std::move(types)) {}

  std::vector<Type> types_;
};

using SignaturePtr = std::shared_ptr<const TypeSignature>;

// Two webs (or a web and a representation) may be combined when their
// signatures agree structurally, not necessarily pointer-wise.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

}  // namespace webtrace
