#include "qfs/expr.hpp"

#include <cctype>
#include <sstream>

#include "qfs/errors.hpp"

namespace qfs {

std::string to_string(Algebra a) { return a == Algebra::Ufs ? "ufs" : "afs"; }

Algebra algebra_from_string(const std::string& s) {
  if (s == "ufs") return Algebra::Ufs;
  if (s == "afs") return Algebra::Afs;
  throw DomainError("algebra must be ufs or afs, got '" + s + "'");
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.number == b.number && a.generator == b.generator && a.charge == b.charge &&
         a.exponent == b.exponent && a.children == b.children && a.signs == b.signs;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, Algebra algebra) : s_(text), alg_(algebra) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) throw SyntaxError(std::string("expected '") + c + "' before end of input", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.position = (skip(), pos_);
    int sign = 1;
    bool explicit_sign = false;
    if (peek() == '+' || peek() == '-') {
      sign = s_[pos_] == '-' ? -1 : 1;
      explicit_sign = sign < 0;
      ++pos_;
    }
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (peek() == '+' || peek() == '-') {
      sum.signs.push_back(s_[pos_] == '-' ? -1 : 1);
      ++pos_;
      sum.children.push_back(term());
    }
    if (sum.children.size() == 1 && !explicit_sign) return std::move(sum.children.front());
    return sum;
  }

  bool starts_atom() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.position = (skip(), pos_);
    prod.children.push_back(factor());
    while (true) {
      if (peek() == '*') {
        ++pos_;
        prod.children.push_back(factor());
      } else if (starts_atom()) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  long long integer(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ >= s_.size()) throw SyntaxError(std::string("expected ") + what + " before end of input", pos_);
      throw SyntaxError(std::string("expected ") + what, pos_);
    }
    if (pos_ - start > 9) throw SyntaxError("integer too large", start);
    return std::stoll(s_.substr(start, pos_ - start));
  }

  long long signed_integer(const char* what) {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    return sign * integer(what);
  }

  Expr factor() {
    Expr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    Expr pw;
    pw.kind = Expr::Kind::Power;
    pw.position = base.position;
    pw.exponent = static_cast<int>(signed_integer("integer exponent"));
    pw.children.push_back(std::move(base));
    if (peek() == '^') throw SyntaxError("repeated exponent; use parentheses", pos_);
    return pw;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    // E+, P-, eta+, z- carry their sign as part of the name
    if ((id == "E" || id == "P" || id == "eta" || id == "z") && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
      id += s_[pos_++];
    return id;
  }

  Expr generator(int g, std::size_t at) {
    Expr e;
    e.kind = Expr::Kind::Generator;
    e.generator = g;
    e.position = at;
    return e;
  }

  Expr exp_charge(std::size_t at) {
    expect('(');
    long long k = 1;
    if (peek() == '-' || peek() == '+' || std::isdigit(static_cast<unsigned char>(peek()))) {
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      }
      k = sign;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        k = sign * integer("charge");
        if (peek() == '*') ++pos_;
      }
    }
    skip();
    const std::size_t lam_at = pos_;
    if (identifier() != "lam") throw SyntaxError("expected 'lam' in exp(k lam/p)", lam_at);
    expect('/');
    skip();
    const std::size_t p_at = pos_;
    if (identifier() != "p") throw SyntaxError("expected 'p' in exp(k lam/p)", p_at);
    expect(')');
    Expr e = generator(static_cast<int>(AfsGen::Exp), at);
    e.charge = static_cast<int>(k);
    return e;
  }

  Expr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      inner.position = at;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Number;
      e.position = at;
      Rational num(static_cast<long>(integer("number")));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw SyntaxError("expected denominator", pos_);
        const long long den = integer("denominator");
        if (den == 0) throw SyntaxError("zero denominator", pos_ - 1);
        num /= Rational(static_cast<long>(den));
        num.canonicalize();
      }
      e.number = num;
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    const std::string id = identifier();
    Expr e;
    e.position = at;
    if (id == "i") return e.kind = Expr::Kind::Imag, e;
    if (id == "q") return e.kind = Expr::Kind::Q, e;
    if (id == "mu") return e.kind = Expr::Kind::Mu, e;
    if (alg_ == Algebra::Ufs) {
      if (id == "E+") return generator(static_cast<int>(UfsGen::Ep), at);
      if (id == "E-") return generator(static_cast<int>(UfsGen::Em), at);
      if (id == "K") return generator(static_cast<int>(UfsGen::K), at);
      if (id == "H") return generator(static_cast<int>(UfsGen::H), at);
      if (id == "P+") return generator(static_cast<int>(UfsGen::Pp), at);
      if (id == "P-") return generator(static_cast<int>(UfsGen::Pm), at);
    } else {
      if (id == "eta+") return generator(static_cast<int>(AfsGen::EtaP), at);
      if (id == "eta-") return generator(static_cast<int>(AfsGen::EtaM), at);
      if (id == "delta") return generator(static_cast<int>(AfsGen::Delta), at);
      if (id == "z+") return generator(static_cast<int>(AfsGen::Zp), at);
      if (id == "z-") return generator(static_cast<int>(AfsGen::Zm), at);
      if (id == "lam") return generator(static_cast<int>(AfsGen::Lam), at);
      if (id == "exp") return exp_charge(at);
    }
    throw UnknownGenerator(id);
  }

  const std::string& s_;
  Algebra alg_;
  std::size_t pos_ = 0;
};

std::string generator_name(const Expr& e, Algebra alg) {
  if (alg == Algebra::Ufs) return to_string(static_cast<UfsGen>(e.generator));
  if (static_cast<AfsGen>(e.generator) == AfsGen::Exp) return "exp(" + std::to_string(e.charge) + " lam/p)";
  return to_string(static_cast<AfsGen>(e.generator));
}

std::string print_rational(const Rational& r) { return r.get_str(); }

// precedence: 0 sum, 1 product, 2 power, 3 atom
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: return 0;
    case Expr::Kind::Product: return 1;
    case Expr::Kind::Power: return 2;
    case Expr::Kind::Number: return e.number.get_den() == 1 ? 3 : 1;
    default: return 3;
  }
}

void print_into(std::ostringstream& os, const Expr& e, Algebra alg);

void print_wrapped(std::ostringstream& os, const Expr& e, Algebra alg, int need) {
  if (precedence(e) < need) {
    os << "(";
    print_into(os, e, alg);
    os << ")";
  } else {
    print_into(os, e, alg);
  }
}

void print_into(std::ostringstream& os, const Expr& e, Algebra alg) {
  switch (e.kind) {
    case Expr::Kind::Number: os << print_rational(e.number); break;
    case Expr::Kind::Imag: os << "i"; break;
    case Expr::Kind::Q: os << "q"; break;
    case Expr::Kind::Mu: os << "mu"; break;
    case Expr::Kind::Generator: os << generator_name(e, alg); break;
    case Expr::Kind::Sum:
      for (std::size_t j = 0; j < e.children.size(); ++j) {
        if (j == 0) {
          if (e.signs[0] < 0) os << "-";
        } else {
          os << (e.signs[j] < 0 ? " - " : " + ");
        }
        // a nested sum or a leading sign needs parentheses
        print_wrapped(os, e.children[j], alg, 1);
      }
      break;
    case Expr::Kind::Product:
      for (std::size_t j = 0; j < e.children.size(); ++j) {
        if (j) os << " * ";
        // a product inside a product would flatten on reparse
        const Expr& c = e.children[j];
        if (c.kind == Expr::Kind::Product || (c.kind == Expr::Kind::Number && c.number.get_den() != 1 && j > 0))
          print_wrapped(os, c, alg, 4);
        else
          print_wrapped(os, c, alg, 1);
      }
      break;
    case Expr::Kind::Power: {
      const Expr& b = e.children.front();
      if (b.kind == Expr::Kind::Number && b.number.get_den() != 1) print_wrapped(os, b, alg, 4);
      else print_wrapped(os, b, alg, 3);
      os << "^" << e.exponent;
      break;
    }
  }
}

template <class Elem>
struct Ops;

template <>
struct Ops<UfsElement> {
  static UfsElement unit(int p) { return ufs_unit(p); }
  static UfsElement gen(int p, const Expr& e) { return ufs_gen(p, static_cast<UfsGen>(e.generator)); }
  static UfsElement mul(const UfsElement& a, const UfsElement& b) { return ufs_mul(a, b); }
  static bool invert(const UfsMonomial& m, int p, UfsMonomial& out) {
    if (m.n || m.m || m.r || m.s || m.l) return false;
    out = m;
    out.k = (p - m.k % p) % p;
    return true;
  }
};

template <>
struct Ops<AfsElement> {
  static AfsElement unit(int p) { return afs_unit(p); }
  static AfsElement gen(int p, const Expr& e) {
    if (static_cast<AfsGen>(e.generator) == AfsGen::Exp) {
      AfsMonomial m;
      m.u = e.charge;
      return afs_mono(p, m);
    }
    return afs_gen(p, static_cast<AfsGen>(e.generator));
  }
  static AfsElement mul(const AfsElement& a, const AfsElement& b) { return afs_mul(a, b); }
  static bool invert(const AfsMonomial& m, int p, AfsMonomial& out) {
    if (m.n || m.m || m.t || m.s || m.l) return false;
    out = m;
    out.d = (p - m.d % p) % p;
    out.u = -m.u;
    return true;
  }
};

template <class Elem>
std::string element_text(const Elem& x);

template <class Elem>
Elem inverse_of(const Elem& x, int p) {
  if (x.size() != 1) throw NegativeExponent(element_text(x));
  const auto& [mono, c] = *x.terms().begin();
  auto inv = mono;
  if (!Ops<Elem>::invert(mono, p, inv)) throw NegativeExponent(element_text(x));
  return Elem::term(p, inv, c.inverse());
}

template <class Elem>
Elem evaluate(const Expr& e, int p) {
  switch (e.kind) {
    case Expr::Kind::Number: return Ops<Elem>::unit(p) * CycloScalar::rational(p, e.number);
    case Expr::Kind::Imag: return Ops<Elem>::unit(p) * CycloScalar::imag(p);
    case Expr::Kind::Q: return Ops<Elem>::unit(p) * CycloScalar::q_power(p, 1);
    case Expr::Kind::Mu: return Ops<Elem>::unit(p) * CycloScalar::mu_power(p, 1);
    case Expr::Kind::Generator: return Ops<Elem>::gen(p, e);
    case Expr::Kind::Sum: {
      Elem out(p);
      for (std::size_t j = 0; j < e.children.size(); ++j) {
        const Elem c = evaluate<Elem>(e.children[j], p);
        if (e.signs[j] < 0) out -= c;
        else out += c;
      }
      return out;
    }
    case Expr::Kind::Product: {
      Elem out = evaluate<Elem>(e.children.front(), p);
      for (std::size_t j = 1; j < e.children.size(); ++j) out = Ops<Elem>::mul(out, evaluate<Elem>(e.children[j], p));
      return out;
    }
    case Expr::Kind::Power: {
      Elem base = evaluate<Elem>(e.children.front(), p);
      if (e.exponent < 0) base = inverse_of(base, p);
      Elem out = Ops<Elem>::unit(p);
      for (int j = std::abs(e.exponent); j > 0; --j) out = Ops<Elem>::mul(out, base);
      return out;
    }
  }
  return Elem(p);
}

void factor_text(std::ostringstream& os, bool& first, const std::string& name, int e) {
  if (e == 0) return;
  if (!first) os << "*";
  first = false;
  os << name;
  if (e != 1) os << "^" << e;
}

std::string mono_text(const UfsMonomial& m) {
  std::ostringstream os;
  bool first = true;
  factor_text(os, first, "E-", m.n);
  factor_text(os, first, "E+", m.m);
  factor_text(os, first, "K", m.k);
  factor_text(os, first, "P+", m.r);
  factor_text(os, first, "P-", m.s);
  factor_text(os, first, "H", m.l);
  return os.str();
}

std::string mono_text(const AfsMonomial& m) {
  std::ostringstream os;
  bool first = true;
  factor_text(os, first, "eta-", m.n);
  factor_text(os, first, "eta+", m.m);
  factor_text(os, first, "delta", m.d);
  factor_text(os, first, "z+", m.t);
  factor_text(os, first, "z-", m.s);
  factor_text(os, first, "lam", m.l);
  if (m.u) {
    if (!first) os << "*";
    os << "exp(" << m.u << " lam/p)";
  }
  return os.str();
}

template <class Elem>
std::string element_text(const Elem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const std::string m = mono_text(mono);
    std::string cs = c.to_string();
    if (cs.find(' ') != std::string::npos || cs.front() == '-') cs = "(" + cs + ")";
    if (m.empty()) os << cs;
    else if (c == CycloScalar::one(x.order())) os << m;
    else os << cs << "*" << m;
  }
  return os.str();
}

}  // namespace

Expr parse(const std::string& text, Algebra algebra) { return Parser(text, algebra).run(); }

std::string print(const Expr& e, Algebra algebra) {
  std::ostringstream os;
  print_into(os, e, algebra);
  return os.str();
}

UfsElement evaluate_ufs(const Expr& e, int p) {
  check_order(p);
  return evaluate<UfsElement>(e, p);
}

AfsElement evaluate_afs(const Expr& e, int p) {
  check_order(p);
  return evaluate<AfsElement>(e, p);
}

UfsElement parse_ufs(const std::string& text, int p) { return evaluate_ufs(parse(text, Algebra::Ufs), p); }
AfsElement parse_afs(const std::string& text, int p) { return evaluate_afs(parse(text, Algebra::Afs), p); }

std::string to_expression(const UfsElement& x) { return element_text(x); }
std::string to_expression(const AfsElement& x) { return element_text(x); }

}  // namespace qfs
