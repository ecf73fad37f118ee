#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ck/corpus.hpp"
#include "ck/predicates.hpp"
#include "ck/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitInputError = 2;

ck::Corpus load_corpus(const std::vector<std::string>& files) {
  if (files.empty()) return ck::default_corpus();
  return ck::corpus_from_files(files);
}

std::optional<ck::GroupContext> context_for(const ck::Corpus& corpus, const std::string& name) {
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.specs[i].name == name) return ck::GroupContext::build(corpus.groups[i]);
  }
  return std::nullopt;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coprimekit: conjugacy class and character conditions on coprime-order elements "
               "in finite groups"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the theorem checks over a corpus");
  std::vector<std::string> corpus_files;
  std::vector<std::string> theorems;
  std::optional<long long> prime;
  std::optional<std::string> group_filter;
  std::string json_path, csv_path;
  bool timings = false;
  verify->add_option("--corpus", corpus_files, "corpus file(s); default: built-in corpus");
  verify->add_option("--theorem", theorems,
                     "restrict to checks: BW A B C DY 2.2 2.3 2.4 2.5 3.1 4.2")
      ->check(CLI::IsMember({"BW", "A", "B", "C", "DY", "2.2", "2.3", "2.4", "2.5", "3.1",
                             "4.2"}));
  verify->add_option("--prime", prime, "restrict per-prime checks to this prime");
  verify->add_option("--group", group_filter, "restrict to one group by name");
  verify->add_option("--json", json_path, "write JSON reports to this path");
  verify->add_option("--csv", csv_path, "write a CSV summary to this path");
  verify->add_flag("--timings", timings, "include timings in the JSON output");

  // table
  auto* table = app.add_subcommand("table", "print the character table of a group");
  std::string table_group, table_format = "text";
  std::vector<std::string> table_corpus;
  table->add_option("--group", table_group, "group name")->required();
  table->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  table->add_option("--corpus", table_corpus, "corpus file(s)");

  // classes
  auto* classes = app.add_subcommand("classes", "print conjugacy class data of a group");
  std::string classes_group;
  std::vector<std::string> classes_corpus;
  classes->add_option("--group", classes_group, "group name")->required();
  classes->add_option("--corpus", classes_corpus, "corpus file(s)");

  // explore
  auto* explore = app.add_subcommand("explore", "run the open-question harnesses");
  std::string question;
  std::vector<std::string> explore_corpus;
  explore->add_option("--question", question, "q41 or q43")
      ->required()
      ->check(CLI::IsMember({"q41", "q43"}));
  explore->add_option("--corpus", explore_corpus, "corpus file(s)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const ck::Corpus corpus = load_corpus(corpus_files);
      if (group_filter && !corpus.find(*group_filter)) {
        std::cerr << "error: no group named '" << *group_filter << "' in the corpus\n";
        return kExitInputError;
      }
      ck::VerifyOptions options;
      options.theorems = theorems;
      options.prime = prime;
      options.group_filter = group_filter;
      options.with_timings = timings;
      const auto reports = ck::run_verification(corpus, options);
      std::cout << ck::summary_table(reports);
      if (!json_path.empty()) write_file(json_path, ck::reports_json(reports, timings).dump(2) + "\n");
      if (!csv_path.empty()) write_file(csv_path, ck::reports_csv(reports));
      bool ok = true;
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          if (c.ok) continue;
          ok = false;
          std::cerr << "FAIL " << r.group_name << " " << c.name << ": " << c.detail;
          for (const auto& cyc : c.witness_cycles) std::cerr << ' ' << cyc;
          std::cerr << '\n';
        }
      }
      return ok ? kExitOk : kExitAssertionFailure;
    }
    if (*table) {
      const auto ctx = context_for(load_corpus(table_corpus), table_group);
      if (!ctx) {
        std::cerr << "error: no group named '" << table_group << "' in the corpus\n";
        return kExitInputError;
      }
      if (table_format == "json")
        std::cout << ck::table_json(*ctx).dump(2) << '\n';
      else
        std::cout << ck::table_text(*ctx);
      return kExitOk;
    }
    if (*classes) {
      const auto ctx = context_for(load_corpus(classes_corpus), classes_group);
      if (!ctx) {
        std::cerr << "error: no group named '" << classes_group << "' in the corpus\n";
        return kExitInputError;
      }
      std::cout << ck::classes_json(*ctx).dump(2) << '\n';
      return kExitOk;
    }
    if (*explore) {
      const ck::Corpus corpus = load_corpus(explore_corpus);
      const auto j = question == "q41" ? ck::explore_q41(corpus) : ck::explore_q43(corpus);
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const ck::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return kExitAssertionFailure;
  }
  return kExitOk;
}
