#include "webtrace/signature.hpp"

#include <cctype>
#include <set>

#include "webtrace/errors.hpp"

namespace webtrace {

std::shared_ptr<const TypeSignature> TypeSignature::make(std::vector<Type> types) {
  std::set<std::string> seen;
  for (const Type& t : types) {
    if (t.name.empty()) {
      throw Error(ErrorCode::invalid_argument, "type with empty name");
    }
    for (char c : t.name) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
          c == ':') {
        throw Error(ErrorCode::invalid_argument,
                    "type name '" + t.name + "' contains whitespace or punctuation");
      }
    }
    if (t.in_arity < 0 || t.out_arity < 0) {
      throw Error(ErrorCode::invalid_argument,
                  "type '" + t.name + "' with negative arity");
    }
    if (!seen.insert(t.name).second) {
      throw Error(ErrorCode::invalid_argument,
                  "duplicate type name '" + t.name + "'");
    }
  }
  return std::shared_ptr<const TypeSignature>(new TypeSignature(std::move(types)));
}

int TypeSignature::index_of(std::string_view name) const {
  for (int i = 0; i < count(); ++i) {
    if (types_[i].name == name) return i;
  }
  return -1;
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace webtrace
