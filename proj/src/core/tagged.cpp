#include "core/tagged.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

struct Elem::Node {
  Kind kind = Kind::base;
  std::string name;   // base
  std::string level;  // gadget
  std::shared_ptr<const Node> lower, upper;
  Point point = Point::filler;
  std::vector<std::string> bits;
  std::string key;
};

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '(' || c == ')' || c == ';' || c == ',') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string point_code(Elem::Point p) {
  switch (p) {
    case Elem::Point::lower_copy: return "L";
    case Elem::Point::upper_copy: return "U";
    case Elem::Point::filler: return "F";
  }
  return "?";
}

}  // namespace

Elem Elem::base(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::base;
  n->name = std::move(name);
  n->key = cat("b(", escape(n->name), ")");
  return Elem(std::move(n));
}

Elem Elem::gadget(std::string level, const Elem& lower, const Elem& upper,
                  Point point, std::vector<std::string> bits) {
  std::sort(bits.begin(), bits.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::gadget;
  n->level = std::move(level);
  n->lower = lower.node_;
  n->upper = upper.node_;
  n->point = point;
  n->bits = std::move(bits);
  std::string bs;
  for (size_t i = 0; i < n->bits.size(); ++i) {
    if (i) bs.push_back(',');
    bs += escape(n->bits[i]);
  }
  n->key = cat("g(", escape(n->level), ";", point_code(point), "{", bs, "};",
               n->lower->key, ";", n->upper->key, ")");
  return Elem(std::move(n));
}

Elem::Kind Elem::kind() const { return node_->kind; }
const std::string& Elem::name() const { return node_->name; }
const std::string& Elem::level() const { return node_->level; }
Elem Elem::lower() const { return Elem(node_->lower); }
Elem Elem::upper() const { return Elem(node_->upper); }
Elem::Point Elem::point() const { return node_->point; }
const std::vector<std::string>& Elem::bits() const { return node_->bits; }
const std::string& Elem::key() const { return node_->key; }

std::string Elem::digest() const {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : node_->key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[15 - i] = hex[(h >> (i * 4)) & 0xf];
  }
  buf[16] = '\0';
  return std::string(buf);
}

std::string Elem::label() const {
  if (is_base()) return node_->name;
  std::string bs;
  for (size_t i = 0; i < node_->bits.size(); ++i) {
    if (i) bs.push_back(',');
    bs += node_->bits[i];
  }
  std::string pt = point_code(node_->point);
  std::string core = pt == "F" ? "F" : cat(pt, "{", bs, "}");
  std::string full = cat(core, "@", node_->level);
  if (full.size() > 24) return cat(pt, "@", node_->level, "#", digest().substr(0, 8));
  return full;
}

}  // namespace pmlat
