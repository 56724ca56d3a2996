// Spawns the installed CLI and checks outputs and the exit-code contract:
// 0 success, 1 input error, 2 impossible encoding, 3 bound-limited verdict.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& command) {
  const std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), std::move(output)};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

int failures = 0;

void expect(bool ok, const std::string& what, const RunResult& r) {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    ++failures;
    std::cout << "[FAILED] " << what << "\n--- output ---\n" << r.output
              << "\n--- exit " << r.exit_code << " ---\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_test <intens-binary> <corpus-file>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::string corpus = argv[2];

  const auto good = write_temp("intens_cli_good.txt", "<a*b> | (x*y).ok\n");
  const auto reserved = write_temp("intens_cli_reserved.txt", "<#r>\n");
  const auto arity_bad = write_temp("intens_cli_arity.txt", "<a,b>\n");
  const auto stuck = write_temp("intens_cli_stuck.txt", "<a> | (=b).ok\n");
  const auto sync_pair = write_temp("intens_cli_pair.txt", "<a>.ok | (y).0\n");

  RunResult r = run(bin + " parse " + good.string() + " --lang AMDI");
  expect(r.exit_code == 0 && r.output == "<a*b> | (x*y).ok\n", "parse valid unit", r);

  r = run(bin + " parse " + reserved.string() + " --lang AMDI");
  expect(r.exit_code == 1 && r.output.find("reserved") != std::string::npos,
         "parse rejects reserved names", r);

  r = run(bin + " parse " + arity_bad.string() + " --lang AMDI");
  expect(r.exit_code == 1 && r.output.find("arity") != std::string::npos,
         "parse reports conformance violations", r);

  r = run(bin + " trace " + good.string() + " --lang AMDI --graph");
  expect(r.exit_code == 0 &&
             r.output == "0: (#b0*#b1).ok | <a*b>\n1: ok\nedge: 0 -> 1\n",
         "trace emits the edge-list format", r);

  r = run(bin + " trace " + stuck.string() + " --lang AMDN");
  expect(r.exit_code == 0 && r.output.find("nodes: 1") != std::string::npos,
         "trace of a stuck process is root-only", r);

  r = run(bin + " encode " + sync_pair.string() + " --from SMDO --to AMDI");
  expect(r.exit_code == 0 &&
             r.output.find("unit intens_cli_pair @ AMDI :=") == 0 &&
             r.output.find("#f0") != std::string::npos,
         "encode emits a target unit", r);

  r = run(bin + " encode " + good.string() + " --from AMDI --to AMDN");
  expect(r.exit_code == 2 && r.output.find("no valid encoding") != std::string::npos,
         "impossible encoding exits 2 with the impossibility message", r);

  r = run(bin + " encode " + good.string() + " --from AMDI --to AMDI");
  expect(r.exit_code == 0 && r.output.find(":= <a*b> | (x*y).ok") != std::string::npos,
         "identity encoding", r);

  r = run(bin + " verify " + corpus + " --from SPCN --to AMDI");
  expect(r.exit_code == 0 && r.output.find("PASS") != std::string::npos &&
             r.output.find("FAIL 0") != std::string::npos,
         "verify passes on the shipped corpus", r);

  r = run(bin + " verify " + corpus + " --from SMDO --to AMDI --mutant drop-ack");
  expect(r.exit_code == 1 && r.output.find("Fail") != std::string::npos,
         "verify fails on a mutant encoder", r);

  r = run(bin + " verify /nonexistent.corpus --to AMDI");
  expect(r.exit_code == 1, "verify reports a bad corpus path", r);

  r = run(bin + " succeeds " + good.string() + " --lang AMDI");
  expect(r.exit_code == 0 && r.output == "Yes\n", "succeeds says Yes", r);

  r = run(bin + " succeeds " + stuck.string() + " --lang AMDN");
  expect(r.exit_code == 3 && r.output == "NotWithinBounds\n",
         "succeeds exits 3 when success is out of reach", r);

  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cout << failures << " cli test(s) failed\n";
  return 1;
}
