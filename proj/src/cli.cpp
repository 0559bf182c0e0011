#include "sbasis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>

#include "sbasis/certificate.hpp"
#include "sbasis/error.hpp"
#include "sbasis/stdbasis.hpp"
#include "sbasis/syzygy.hpp"

namespace sbasis {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> splitVars(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

struct Options {
  std::string command;
  std::string input;
  std::string route = "moeller";
  bool tailReduce = false;
  std::string dsVariant = "revlex";
  std::size_t iterationLimit = 1'000'000;
  bool emitCertificates = false;
  std::string certOut;
  std::vector<std::string> targets;
  std::vector<std::size_t> pair;
};

Route parseRoute(const std::string& name) {
  if (name == "generic") return Route::Generic;
  if (name == "moeller") return Route::Moeller;
  if (name == "homog") return Route::Homogenization;
  if (name == "pid") return Route::PID;
  throw Error(Errc::InvalidArgument, "unknown route '" + name + "'");
}

// Presentation only: positive leading coefficient over Z, monic over Q.
Scalar displayFactor(const Polynomial& g) {
  const Ring& R = g.ring()->coeffs();
  const Scalar& lc = g.leadingCoeff();
  if (R.kind() == RingKind::Rationals) return 1 / lc;
  if (R.kind() == RingKind::Integers && lc < 0) return -1;
  return 1;
}

struct Element {
  Polynomial g;
  std::vector<Polynomial> lift;
  std::string text;
};

std::vector<Element> presentable(const Basis& B) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < B.gens.size(); ++i) {
    const Scalar c = displayFactor(B.gens[i]);
    Element e{B.gens[i].scaled(c), {}, {}};
    if (B.hasLifts()) {
      for (const auto& l : B.lifts[i]) e.lift.push_back(l.scaled(c));
    }
    e.text = toString(e.g);
    out.push_back(std::move(e));
  }
  const MonomialOrdering& ord = B.ring->order();
  std::stable_sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
    auto c = ord.compare(a.g.leadingMonomial(), b.g.leadingMonomial());
    if (c != 0) return c > 0;
    return a.text < b.text;
  });
  return out;
}

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  int run() {
    if (opt_.command == "verify") return verify();
    const DsVariant variant = opt_.dsVariant == "lex" ? DsVariant::Lex : DsVariant::RevLex;
    job_ = withInput([&](std::istream& s) { return parseJob(s, variant); });
    for (const auto& t : opt_.targets) job_.targets.push_back(parsePolynomial(t, job_.ring));
    if (opt_.command == "spoly") return spolys();
    if (opt_.command == "syzlt") return syzlt();
    if (job_.ideal.empty()) throw Error(Errc::EmptyInput, "no generators");
    if (opt_.command == "std") return standard();
    if (opt_.command == "strongstd") return strong();
    if (opt_.command == "nf") return normalForms();
    if (opt_.command == "member") return member();
    throw Error(Errc::InvalidArgument, "unknown command '" + opt_.command + "'");
  }

 private:
  template <class F>
  std::invoke_result_t<F, std::istream&> withInput(F&& f) {
    if (opt_.input == "-") return f(in_);
    std::ifstream file(opt_.input);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + opt_.input + "'");
    return f(file);
  }

  DriverOptions driverOptions() const {
    DriverOptions d;
    d.iterationLimit = opt_.iterationLimit;
    d.trackLifts = opt_.emitCertificates;
    return d;
  }

  std::vector<Route> routes() const {
    if (opt_.route != "all") return {parseRoute(opt_.route)};
    std::vector<Route> r{Route::Generic, Route::Moeller, Route::Homogenization};
    if (job_.ring->coeffs().isPID()) r.push_back(Route::PID);
    return r;
  }

  // Certificates go to --cert-out when given, otherwise after the results.
  std::ostream& certStream() {
    if (opt_.certOut.empty()) return out_;
    if (!certFile_.is_open()) {
      certFile_.open(opt_.certOut);
      if (!certFile_) throw Error(Errc::InvalidArgument, "cannot write '" + opt_.certOut + "'");
    }
    return certFile_;
  }

  void printBasis(const Basis& B) {
    const auto elems = presentable(B);
    for (const auto& e : elems) out_ << e.text << '\n';
    if (!opt_.emitCertificates) return;
    std::ostream& cs = certStream();
    if (&cs == &out_) out_ << '\n';
    for (const auto& e : elems) writeCertificate(cs, LiftCertificate{job_.ideal, e.g, e.lift});
  }

  int standard() {
    std::vector<Basis> results;
    const auto rs = routes();
    for (Route r : rs) results.push_back(standardBasis(job_.ideal, r, driverOptions()));
    if (rs.size() == 1) {
      printBasis(results.front());
      return 0;
    }
    bool agree = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      out_ << "# route " << routeName(rs[i]) << '\n';
      printBasis(results[i]);
      agree = agree && sameLeadingIdeal(results[i].gens, results.front().gens);
    }
    out_ << "# leading ideals agree: " << (agree ? "yes" : "no") << '\n';
    return 0;
  }

  int strong() {
    DriverOptions d = driverOptions();
    Basis B;
    if (satisfiesSyzygyCriterion(job_.ideal, d)) {
      B = makeBasis(job_.ideal);
      B.isStandard = true;
      if (d.trackLifts) {
        for (std::size_t i = 0; i < job_.ideal.size(); ++i) {
          std::vector<Polynomial> l(job_.ideal.size(), Polynomial(job_.ring));
          l[i] = Polynomial::constant(job_.ring, 1);
          B.lifts.push_back(std::move(l));
        }
      }
    } else {
      B = standardBasis(job_.ideal, routes().front(), d);
    }
    printBasis(strongStandardBasis(B, d));
    return 0;
  }

  int normalForms() {
    if (job_.targets.empty()) throw Error(Errc::EmptyInput, "no targets");
    NormalFormOptions nfo;
    nfo.iterationLimit = opt_.iterationLimit;
    nfo.tailReduce = opt_.tailReduce;
    std::vector<NormalFormCertificate> certs;
    for (const auto& f : job_.targets) {
      StandardRepresentation rep = normalForm(f, job_.ideal, nfo);
      out_ << toString(rep.remainder) << '\n';
      certs.push_back({f, job_.ideal, std::move(rep)});
    }
    if (opt_.emitCertificates) {
      std::ostream& cs = certStream();
      if (&cs == &out_) out_ << '\n';
      for (const auto& c : certs) writeCertificate(cs, c);
    }
    return 0;
  }

  int member() {
    if (job_.targets.empty()) throw Error(Errc::EmptyInput, "no targets");
    DriverOptions d = driverOptions();
    d.trackLifts = false;
    Basis B = standardBasis(job_.ideal, routes().front(), d);
    for (const auto& f : job_.targets) {
      out_ << toString(f) << ": " << (idealMembershipLocalized(f, B) ? "member" : "not a member") << '\n';
    }
    return 0;
  }

  int spolys() {
    const auto& F = job_.ideal;
    auto print = [&](std::size_t i, std::size_t j) {
      if (i >= F.size() || j >= F.size()) throw Error(Errc::InvalidArgument, "pair index out of range");
      out_ << "spoly(" << i + 1 << "," << j + 1 << ") = " << toString(spoly(F[i], F[j])) << '\n';
    };
    if (!opt_.pair.empty()) {
      if (opt_.pair.size() != 2 || opt_.pair[0] == 0 || opt_.pair[1] == 0) {
        throw Error(Errc::InvalidArgument, "--pair takes two 1-based indices");
      }
      print(opt_.pair[0] - 1, opt_.pair[1] - 1);
      return 0;
    }
    if (F.size() < 2) throw Error(Errc::EmptyInput, "spoly needs at least two generators");
    for (std::size_t j = 1; j < F.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) print(i, j);
    }
    return 0;
  }

  int syzlt() {
    if (job_.ideal.empty()) throw Error(Errc::EmptyInput, "no generators");
    std::vector<Term> lts;
    for (const auto& f : job_.ideal) lts.push_back(f.leadingTerm());
    for (const auto& v : homogeneousSyzygyBasis(lts, job_.ring)) {
      out_ << '(';
      for (std::size_t i = 0; i < v.coords.size(); ++i) out_ << (i ? ", " : "") << toString(v.coords[i]);
      out_ << ")\n";
    }
    return 0;
  }

  int verify() {
    auto certs = withInput([](std::istream& s) { return readCertificates(s); });
    if (certs.empty()) throw Error(Errc::EmptyInput, "no certificates");
    bool all = true;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      CertificateCheck c = checkCertificate(certs[i]);
      out_ << "certificate " << i + 1 << ": " << (c.ok ? "ok" : "FAILED (" + c.message + ")") << '\n';
      all = all && c.ok;
    }
    return all ? 0 : static_cast<int>(ExitCode::VerifyFailed);
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ofstream certFile_;
  JobSpec job_;
};

}  // namespace

JobSpec parseJob(std::istream& in, DsVariant dsVariant) {
  std::optional<Ring> coeffs;
  std::vector<std::string> vars;
  std::optional<std::string> order;
  JobSpec job;
  enum class Section { Header, Ideal, Targets } section = Section::Header;
  std::size_t lineNo = 0;
  // Errors already carrying the line number pass through the catch below.
  struct LineError : Error {
    using Error::Error;
  };
  auto fail = [&](const std::string& msg) {
    return LineError(Errc::Parse, "line " + std::to_string(lineNo) + ": " + msg);
  };
  auto ensureRing = [&] {
    if (job.ring) return;
    if (!coeffs || vars.empty() || !order) throw fail("ring, vars and order must precede the ideal");
    job.ring = makePolyRing(*coeffs, vars, parseOrdering(*order, vars.size(), dsVariant));
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line == "ideal:" || line == "targets:") {
        ensureRing();
        section = line == "ideal:" ? Section::Ideal : Section::Targets;
        continue;
      }
      if (section == Section::Header) {
        const auto sp = line.find_first_of(" \t");
        const std::string key = line.substr(0, sp);
        const std::string value = sp == std::string::npos ? std::string{} : trim(line.substr(sp));
        if (key == "ring") {
          coeffs = parseRing(value);
        } else if (key == "vars") {
          vars = splitVars(value);
        } else if (key == "order") {
          order = value;
        } else {
          throw fail("unknown header key '" + key + "'");
        }
        continue;
      }
      Polynomial p = parsePolynomial(line, job.ring);
      if (section == Section::Ideal) {
        if (!p.isZero()) job.ideal.push_back(std::move(p));
      } else {
        job.targets.push_back(std::move(p));
      }
    } catch (const LineError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  ensureRing();
  return job;
}

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Standard bases over Z, Z/m and Q for arbitrary matrix orderings", "sbasis"};
  app.add_option("command", opt.command, "std | strongstd | nf | spoly | syzlt | member | verify")
      ->required()
      ->check(CLI::IsMember({"std", "strongstd", "nf", "spoly", "syzlt", "member", "verify"}));
  app.add_option("input", opt.input, "job file (certificate file for verify); - reads stdin")->required();
  app.add_option("--route", opt.route, "generic | moeller | homog | pid | all")
      ->check(CLI::IsMember({"generic", "moeller", "homog", "pid", "all"}));
  app.add_flag("--tail-reduce", opt.tailReduce, "fully reduce remainders (field, global ordering)");
  app.add_option("--ds-variant", opt.dsVariant, "tie-break of ds: revlex | lex")
      ->check(CLI::IsMember({"revlex", "lex"}));
  app.add_option("--iteration-limit", opt.iterationLimit, "reduction / pair ceiling");
  app.add_flag("--emit-certificates", opt.emitCertificates, "write lifts or standard representations");
  app.add_option("--cert-out", opt.certOut, "certificate file (default: after the results)");
  app.add_option("--target", opt.targets, "extra target polynomial (repeatable)");
  app.add_option("--pair", opt.pair, "1-based generator pair for spoly")->delimiter(',')->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }

  try {
    Session session(opt, in, out);
    return session.run();
  } catch (const Error& e) {
    err << "sbasis: " << e.what() << '\n';
    if (e.code() == Errc::IterationLimit) return static_cast<int>(ExitCode::IterationLimit);
    return static_cast<int>(ExitCode::InputError);
  }
}

}  // namespace sbasis
