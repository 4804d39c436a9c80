#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "monkey/entropy.hpp"
#include "monkey/simulate.hpp"
#include "monkey/waiting.hpp"

namespace {

using monkey::Alphabet;
using monkey::NormalizedText;
using monkey::TypingSpeed;
using monkey::WaitMode;
using ordered_json = nlohmann::ordered_json;

// exit codes: 0 success, 1 usage error, 2 input/data error
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double h = 0.863;
    int m = 27;
    TypingSpeed speed;
    std::string mode = "rounded";
    std::string format = "table";
    std::string method = "ngram";
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::uint32_t window = 65536;
    int ngram_order = 2;
    int workers = 0;
};

WaitMode parse_mode(const std::string& s) {
    if (s == "rounded") return WaitMode::rounded_rule;
    if (s == "precise") return WaitMode::full_precision;
    return WaitMode::exact_border;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("cannot read file: " + path);
    return buf.str();
}

// ---- output rendering ----

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// scalar cell as text; numbers keep their shortest round-trip form
std::string cell_text(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit_csv(const std::vector<ordered_json>& records) {
    std::string header;
    for (const auto& [key, value] : records.front().items()) {
        if (!header.empty()) header += ',';
        header += csv_escape(key);
    }
    std::cout << header << '\n';
    for (const auto& rec : records) {
        std::string line;
        for (const auto& [key, value] : rec.items()) {
            if (!line.empty()) line += ',';
            line += csv_escape(cell_text(value));
        }
        std::cout << line << '\n';
    }
}

void emit_grid(const std::vector<ordered_json>& records) {
    std::vector<std::string> keys;
    for (const auto& [key, value] : records.front().items()) keys.push_back(key);

    std::vector<std::vector<std::string>> rows;
    rows.push_back(keys);
    for (const auto& rec : records) {
        std::vector<std::string> row;
        for (const auto& key : keys) {
            std::string cell = cell_text(rec.at(key));
            row.push_back(cell.empty() ? "-" : cell);
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line.append(2, ' ');
            line += row[c];
            if (c + 1 < row.size())
                line.append(width[c] - row[c].size(), ' ');
        }
        std::cout << line << '\n';
    }
}

void emit(const std::vector<ordered_json>& records, const std::string& format) {
    if (records.empty()) return;
    if (format == "json") {
        ordered_json arr(records);
        std::cout << arr.dump(2) << '\n';
    } else if (format == "csv") {
        emit_csv(records);
    } else if (records.size() == 1) {
        for (const auto& [key, value] : records.front().items())
            std::cout << key << ": " << cell_text(value) << '\n';
    } else {
        emit_grid(records);
    }
}

// ---- commands ----

void append_waiting_fields(ordered_json& rec, const NormalizedText& text,
                           const Options& opt) {
    WaitMode mode = parse_mode(opt.mode);
    auto edu =
        monkey::estimate(text, monkey::Educated{opt.h}, opt.speed, mode);
    auto rnd =
        monkey::estimate(text, monkey::UniformRandom{opt.m}, opt.speed, mode);
    rec["educated_mode"] = monkey::wait_mode_name(edu.mode);
    rec["educated_keystrokes"] = monkey::lq_format(edu.keystrokes, 3);
    rec["educated_keystrokes_log10"] = edu.keystrokes.log10();
    rec["educated_years_log10"] = edu.years.log10();
    rec["educated_time"] = edu.display;
    rec["random_mode"] = monkey::wait_mode_name(rnd.mode);
    rec["random_keystrokes"] = monkey::lq_format(rnd.keystrokes, 3);
    rec["random_keystrokes_log10"] = rnd.keystrokes.log10();
    rec["random_years_log10"] = rnd.years.log10();
    rec["random_time"] = rnd.display;
}

int cmd_quote(const std::string& phrase, const Options& opt) {
    NormalizedText text = monkey::normalize(phrase, Alphabet::canonical());
    if (text.length() == 0)
        throw DataError("phrase normalizes to an empty string");
    ordered_json rec;
    rec["phrase"] = phrase;
    rec["normalized"] = text.content();
    rec["length"] = text.length();
    append_waiting_fields(rec, text, opt);
    emit({rec}, opt.format);
    return 0;
}

int cmd_corpus(const std::string& path, const Options& opt) {
    NormalizedText text =
        monkey::normalize(read_file(path), Alphabet::canonical());
    ordered_json rec;
    rec["file"] = path;
    rec["length"] = text.length();
    append_waiting_fields(rec, text, opt);
    emit({rec}, opt.format);
    return 0;
}

struct GalleryRow {
    const char* source;
    const char* text; // as spoken/written, pre-normalization
};

// famous-phrase gallery; the three full-length works are not embedded and
// take the corpus command instead
const GalleryRow kGallery[] = {
    {"muhammad ali", "Me, we"},
    {"the terminator", "I'll be back"},
    {"julius caesar", "The die is cast"},
    {"yoda", "May the Force be with you"},
    {"franklin d roosevelt",
     "The only thing we have to fear is fear itself"},
    {"spice girls", "I'll tell you what I want, what I really really want"},
    {"rolling stones",
     "I can't get no satisfaction, gonna try and I try and I try and I try"},
    {"winston churchill",
     "Success is not final, failure is not fatal. It is the courage to "
     "continue that counts"},
    {"stephen hawking",
     "We are just an advanced breed of monkeys on a minor planet of a very "
     "average star. But we can understand the Universe"},
    {"hamlet", "To be or not to be"},
};

const char* kExternalRows[] = {
    "hamlet (entire play)",
    "hope is the thing with feathers (emily dickinson, entire poem)",
    "twinkle twinkle little star (entire lullaby)",
};

int cmd_table(const Options& opt) {
    std::vector<ordered_json> records;
    for (const auto& row : kGallery) {
        NormalizedText text =
            monkey::normalize(row.text, Alphabet::canonical());
        ordered_json rec;
        rec["source"] = row.source;
        rec["normalized"] = text.content();
        rec["length"] = text.length();
        append_waiting_fields(rec, text, opt);
        rec["note"] = "";
        records.push_back(std::move(rec));
    }
    for (const char* name : kExternalRows) {
        ordered_json rec;
        rec["source"] = name;
        rec["normalized"] = nullptr;
        rec["length"] = nullptr;
        rec["educated_mode"] = nullptr;
        rec["educated_keystrokes"] = nullptr;
        rec["educated_keystrokes_log10"] = nullptr;
        rec["educated_years_log10"] = nullptr;
        rec["educated_time"] = nullptr;
        rec["random_mode"] = nullptr;
        rec["random_keystrokes"] = nullptr;
        rec["random_keystrokes_log10"] = nullptr;
        rec["random_years_log10"] = nullptr;
        rec["random_time"] = nullptr;
        rec["note"] = "external input required; use the corpus command";
        records.push_back(std::move(rec));
    }
    emit(records, opt.format);
    return 0;
}

int cmd_estimate(const std::string& path, const Options& opt) {
    NormalizedText text =
        monkey::normalize(read_file(path), Alphabet::canonical());
    monkey::EntropyEstimate est;
    try {
        if (opt.method == "ngram") {
            est = monkey::ngram_conditional_entropy(text, opt.ngram_order,
                                                    opt.workers);
        } else {
            est = monkey::match_length_entropy(text, opt.window);
        }
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what()); // the input, not the invocation, is at fault
    }
    ordered_json rec;
    rec["file"] = path;
    rec["length"] = text.length();
    rec["method"] = est.method;
    rec["parameter"] = est.parameter;
    rec["sample_size"] = est.sample_size;
    rec["bits_per_character"] = est.value;
    emit({rec}, opt.format);
    return 0;
}

int cmd_simulate(const std::string& pattern, const Options& opt) {
    NormalizedText text = monkey::normalize(pattern, Alphabet::canonical());
    if (text.length() == 0)
        throw DataError("pattern normalizes to an empty string");
    monkey::MonkeyModel model = monkey::UniformRandom{opt.m};
    monkey::TrialSummary summary =
        monkey::simulate_waiting(model, text, opt.trials, opt.seed, opt.workers);
    monkey::LogQuantity exact = monkey::exact_expected_wait(text, model);
    monkey::LogQuantity rule = monkey::keystrokes_random(text.length(), opt.m);

    ordered_json rec;
    rec["pattern"] = pattern;
    rec["normalized"] = text.content();
    rec["length"] = text.length();
    rec["m"] = opt.m;
    rec["trials"] = summary.trials;
    rec["seed"] = summary.seed;
    rec["empirical_mean"] = summary.mean;
    rec["empirical_stderr"] = summary.stderr_;
    rec["min"] = summary.min;
    rec["max"] = summary.max;
    rec["exact_mean"] = exact.value();
    rec["rule_mean"] = rule.value();
    rec["mean_over_exact"] = summary.mean / exact.value();
    rec["exact_over_rule"] = exact.value() / rule.value();
    emit({rec}, opt.format);
    return 0;
}

int cmd_presets(const Options& opt) {
    std::vector<ordered_json> records;
    for (const auto& row : monkey::preset_estimates()) {
        ordered_json rec;
        rec["name"] = row.name;
        rec["method"] = row.method;
        rec["low_bpc"] = row.low;
        rec["high_bpc"] = row.high;
        rec["default"] = row.is_default;
        rec["note"] = row.note;
        records.push_back(std::move(rec));
    }
    emit(records, opt.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"waiting times for randomly and educatedly typing monkeys"};
    app.require_subcommand(1);
    app.fallthrough();
    // --h is taken by the entropy rate, so help has no short form
    app.set_help_flag("--help", "print usage");

    Options opt;
    app.add_option("--h", opt.h, "entropy rate of the educated monkey, bits/character")
        ->envname("MONKEY_H")
        ->check(CLI::PositiveNumber);
    app.add_option("--m", opt.m, "alphabet size of the random monkey")
        ->envname("MONKEY_M")
        ->check(CLI::Range(2, 256));
    app.add_option("--wpm", opt.speed.words_per_minute, "typing speed, words/minute")
        ->envname("MONKEY_WPM")
        ->check(CLI::PositiveNumber);
    app.add_option("--chars-per-word", opt.speed.chars_per_word, "characters per word")
        ->envname("MONKEY_CHARS_PER_WORD")
        ->check(CLI::PositiveNumber);
    app.add_option("--hours-per-day", opt.speed.hours_per_day, "typing hours per day")
        ->envname("MONKEY_HOURS_PER_DAY")
        ->check(CLI::Range(1e-9, 24.0));
    app.add_option("--days-per-year", opt.speed.days_per_year, "typing days per year")
        ->envname("MONKEY_DAYS_PER_YEAR")
        ->check(CLI::PositiveNumber);
    app.add_option("--mode", opt.mode, "rounded: display rule; precise: unrounded; exact: border sum")
        ->envname("MONKEY_MODE")
        ->check(CLI::IsMember({"rounded", "precise", "exact"}));
    app.add_option("--format", opt.format, "output format")
        ->envname("MONKEY_FORMAT")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--trials", opt.trials, "simulation trial count")
        ->envname("MONKEY_TRIALS");
    app.add_option("--seed", opt.seed, "simulation seed")->envname("MONKEY_SEED");
    app.add_option("--window", opt.window, "match-length estimator window")
        ->envname("MONKEY_WINDOW");
    app.add_option("--ngram-order", opt.ngram_order, "n-gram estimator order")
        ->envname("MONKEY_NGRAM_ORDER")
        ->check(CLI::Range(1, 16));
    app.add_option("--workers", opt.workers, "worker threads; 0 = all cores")
        ->envname("MONKEY_WORKERS");

    std::string phrase, corpus_path, estimate_path, pattern;
    CLI::App* quote = app.add_subcommand("quote", "waiting times for one phrase");
    quote->add_option("phrase", phrase, "text to wait for")->required();
    CLI::App* corpus = app.add_subcommand("corpus", "waiting times for a whole text file");
    corpus->add_option("file", corpus_path, "UTF-8 text file")->required();
    CLI::App* table = app.add_subcommand("table", "famous-phrase gallery with both estimates");
    CLI::App* estimate = app.add_subcommand("estimate", "entropy rate of a text file");
    estimate->add_option("file", estimate_path, "UTF-8 text file")->required();
    estimate->add_option("--method", opt.method, "estimator")
        ->envname("MONKEY_METHOD")
        ->check(CLI::IsMember({"ngram", "matchlen"}));
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo first-occurrence times");
    simulate->add_option("pattern", pattern, "pattern to wait for")->required();
    CLI::App* presets = app.add_subcommand("presets", "published entropy-rate estimates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*quote) return cmd_quote(phrase, opt);
        if (*corpus) return cmd_corpus(corpus_path, opt);
        if (*table) return cmd_table(opt);
        if (*estimate) return cmd_estimate(estimate_path, opt);
        if (*simulate) return cmd_simulate(pattern, opt);
        if (*presets) return cmd_presets(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
