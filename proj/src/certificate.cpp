#include "sbasis/certificate.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

void writeHeader(std::ostream& out, const PolyRing& ring) {
  out << "ring: " << ring.coeffs().describe() << '\n';
  out << "vars: ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out << (i ? "," : "") << ring.vars()[i];
  out << '\n';
  // the matrix form keeps the ds tie-break unambiguous
  out << "order: " << formatOrderingMatrix(ring.order()) << '\n';
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Error lineError(std::size_t line, const std::string& msg) {
  return Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct Field {
  std::string key;
  std::string value;
  std::size_t line;
};

// Collects the key: value lines of one block.
class Block {
 public:
  Block(std::string kind, std::size_t line) : kind_(std::move(kind)), line_(line) {}

  void add(Field f) { fields_.push_back(std::move(f)); }
  const std::string& kind() const { return kind_; }

  PolyRingPtr ring() const {
    const Field& r = single("ring");
    const Field& v = single("vars");
    const Field& o = single("order");
    try {
      std::vector<std::string> vars;
      std::string name;
      std::istringstream vs(v.value);
      while (std::getline(vs, name, ',')) vars.push_back(trim(name));
      Ring coeffs = parseRing(r.value);
      MonomialOrdering ord = parseOrdering(o.value, vars.size());
      return makePolyRing(std::move(coeffs), std::move(vars), std::move(ord));
    } catch (const Error& e) {
      throw lineError(r.line, e.what());
    }
  }

  const Field& single(const std::string& key) const {
    const Field* found = nullptr;
    for (const auto& f : fields_) {
      if (f.key != key) continue;
      if (found) throw lineError(f.line, "duplicate '" + key + "'");
      found = &f;
    }
    if (!found) throw lineError(line_, "block is missing '" + key + "'");
    return *found;
  }

  std::vector<Polynomial> polys(const std::string& key, const PolyRingPtr& ring) const {
    std::vector<Polynomial> out;
    for (const auto& f : fields_) {
      if (f.key == key) out.push_back(parse(f, ring));
    }
    return out;
  }

  Polynomial poly(const std::string& key, const PolyRingPtr& ring) const { return parse(single(key), ring); }

  void checkKeys(std::initializer_list<const char*> allowed) const {
    for (const auto& f : fields_) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || f.key == a;
      if (!ok) throw lineError(f.line, "unexpected key '" + f.key + "' in " + kind_ + " block");
    }
  }

 private:
  static Polynomial parse(const Field& f, const PolyRingPtr& ring) {
    try {
      return parsePolynomial(f.value, ring);
    } catch (const Error& e) {
      throw lineError(f.line, e.what());
    }
  }

  std::string kind_;
  std::size_t line_;
  std::vector<Field> fields_;
};

Certificate build(const Block& b) {
  const PolyRingPtr ring = b.ring();
  if (b.kind() == "normal-form") {
    b.checkKeys({"ring", "vars", "order", "f", "g", "u", "xi", "r"});
    NormalFormCertificate c{b.poly("f", ring), b.polys("g", ring),
                            {b.poly("u", ring), b.polys("xi", ring), b.poly("r", ring)}};
    return c;
  }
  b.checkKeys({"ring", "vars", "order", "f", "g", "lambda"});
  LiftCertificate c{b.polys("f", ring), b.poly("g", ring), b.polys("lambda", ring)};
  return c;
}

}  // namespace

void writeCertificate(std::ostream& out, const NormalFormCertificate& cert) {
  out << "begin normal-form\n";
  writeHeader(out, *cert.f.ring());
  out << "f: " << toString(cert.f) << '\n';
  for (const auto& g : cert.G) out << "g: " << toString(g) << '\n';
  out << "u: " << toString(cert.rep.unit) << '\n';
  for (const auto& xi : cert.rep.coeffs) out << "xi: " << toString(xi) << '\n';
  out << "r: " << toString(cert.rep.remainder) << '\n';
  out << "end\n";
}

void writeCertificate(std::ostream& out, const LiftCertificate& cert) {
  out << "begin lift\n";
  writeHeader(out, *cert.g.ring());
  for (const auto& f : cert.inputs) out << "f: " << toString(f) << '\n';
  out << "g: " << toString(cert.g) << '\n';
  for (const auto& l : cert.lambda) out << "lambda: " << toString(l) << '\n';
  out << "end\n";
}

std::vector<Certificate> readCertificates(std::istream& in) {
  std::vector<Certificate> out;
  std::optional<Block> open;
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!open) {
      if (line == "begin normal-form" || line == "begin lift") {
        open.emplace(line.substr(6), lineNo);
        continue;
      }
      throw lineError(lineNo, "expected 'begin normal-form' or 'begin lift'");
    }
    if (line == "end") {
      out.push_back(build(*open));
      open.reset();
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw lineError(lineNo, "expected 'key: value'");
    open->add({trim(std::string_view(line).substr(0, colon)), trim(std::string_view(line).substr(colon + 1)),
               lineNo});
  }
  if (open) throw lineError(lineNo, "unterminated block");
  return out;
}

CertificateCheck checkCertificate(const Certificate& cert) {
  if (const auto* nf = std::get_if<NormalFormCertificate>(&cert)) {
    CertificateStatus s = verifyStandardRepresentation(nf->f, nf->G, nf->rep);
    return {s == CertificateStatus::Ok, describe(s)};
  }
  const auto& lift = std::get<LiftCertificate>(cert);
  if (lift.lambda.size() != lift.inputs.size()) return {false, "lambda count differs from input count"};
  Polynomial sum(lift.g.ring());
  for (std::size_t j = 0; j < lift.inputs.size(); ++j) sum += lift.lambda[j] * lift.inputs[j];
  if (!(sum == lift.g)) return {false, "g differs from sum lambda_j*f_j"};
  return {true, "ok"};
}

}  // namespace sbasis
