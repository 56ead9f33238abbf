// triso: real solutions with multiplicities of triangular polynomial systems.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "triso/errors.hpp"
#include "triso/io.hpp"
#include "triso/multi_isolate.hpp"
#include "triso/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kPositiveDimension = 2;
constexpr int kInvalidInput = 3;

unsigned thread_count() {
  const char* env = std::getenv("TRISO_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    return 0;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string file;
  std::string precision = "1/64";
  std::string format = "json";
  bool decomposition = false;
  bool verify = false;
};

// Solutions that fail verify_solution or disagree with the derivative oracle.
int count_failures(const triso::TriangularSystem& t, const triso::MultiIsolation& m) {
  int bad = 0;
  for (const auto& s : m.solutions) {
    const auto& branch = m.branches[s.branch_id];
    bool ok = triso::verify_solution(t, s, branch);
    if (ok) {
      triso::AlgebraicPoint pt = triso::branch_point(branch, s.box);
      for (std::size_t k = 0; k < t.size() && ok; ++k) {
        ok = triso::mult_by_derivatives(t, pt, k) == s.exponents[k];
      }
    }
    if (!ok) ++bad;
  }
  return bad;
}

int run(const Options& opt, bool verify_only) {
  bool json = opt.format == "json";
  triso::ResultDocument doc;
  try {
    triso::SystemDocument sys = triso::parse_system_document(read_file(opt.file));
    doc.variables = sys.var_order;
    triso::TriangularSystem t = triso::to_system(sys);
    triso::Rational precision = triso::parse_rational(opt.precision);
    if (triso::sign(precision) <= 0) throw std::invalid_argument("precision must be positive");

    triso::MultiIsolation m = triso::multi_isolate(t, precision, thread_count());
    int failures = (opt.verify || verify_only) ? count_failures(t, m) : 0;
    if (verify_only) {
      std::cout << m.solutions.size() << " solutions, " << failures << " failed\n";
    } else {
      doc = triso::make_result(m, sys.var_order, precision);
      std::cout << (json ? triso::to_json(doc, opt.decomposition) : triso::to_text(doc, opt.decomposition));
    }
    if (failures > 0) {
      std::cerr << "verification failed for " << failures << " solution(s)\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const triso::PositiveDimension&) {
    std::cerr << triso::kPositiveDimensionMessage << "\n";
    if (json && !verify_only) {
      doc.status = triso::Status::positive_dimension;
      doc.message = triso::kPositiveDimensionMessage;
      std::cout << triso::to_json(doc, false);
    }
    return kPositiveDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json && !verify_only) {
      doc.status = triso::Status::error;
      doc.message = e.what();
      std::cout << triso::to_json(doc, false);
    }
    return kInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real solutions with multiplicities of triangular polynomial systems"};
  app.require_subcommand(1);

  Options iso;
  auto* isolate = app.add_subcommand("isolate", "isolate the real solutions of a system file");
  isolate->add_option("file", iso.file, "system file")->required();
  isolate->add_option("--precision", iso.precision, "maximum box width, e.g. 1/64");
  isolate->add_option("--format", iso.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  isolate->add_flag("--decomposition", iso.decomposition, "include the triangular decomposition");
  isolate->add_flag("--verify", iso.verify, "certify every solution afterwards");

  Options ver;
  auto* verify = app.add_subcommand("verify", "isolate and cross-check against the derivative oracle");
  verify->add_option("file", ver.file, "system file")->required();
  verify->add_option("--precision", ver.precision, "maximum box width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }
  if (*isolate) return run(iso, false);
  return run(ver, true);
}
