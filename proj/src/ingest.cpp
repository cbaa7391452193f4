#include <acadtree/ingest.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>
#include <sstream>

namespace acadtree {

namespace pt = boost::property_tree;
using nlohmann::json;

namespace {

constexpr std::string_view kSpaces = " \t\r\n\f\v";

std::string trim(std::string_view text) {
    auto first = text.find_first_not_of(kSpaces);
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = text.find_last_not_of(kSpaces);
    return std::string(text.substr(first, last - first + 1));
}

std::optional<std::string> optional_text(std::string_view text) {
    auto trimmed = trim(text);
    if (trimmed.empty()) {
        return std::nullopt;
    }
    return trimmed;
}

std::vector<std::string> split_variants(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        if (auto part = trim(text.substr(start, end - start)); !part.empty()) {
            out.push_back(std::move(part));
        }
        start = end + 1;
    }
    return out;
}

int parse_year_text(std::string_view raw, std::string_view where) {
    auto text = trim(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidYear,
                    std::string(where) + ": year '" + text + "' is not an integer");
    }
    return value;
}

int check_year(int year, std::string_view where) {
    if (year < kMinYear || year > max_accepted_year()) {
        throw Error(ErrorCode::InvalidYear, std::string(where) + ": year " +
                                                std::to_string(year) + " outside [" +
                                                std::to_string(kMinYear) + ", " +
                                                std::to_string(max_accepted_year()) + "]");
    }
    return year;
}

void validate(const ResearcherRecord& record) {
    if (record.id.empty()) {
        throw Error(ErrorCode::MissingRequiredField, "curriculum has no id");
    }
    if (record.full_name.empty()) {
        throw Error(ErrorCode::MissingRequiredField, "curriculum '" + record.id + "' has no name");
    }
    try {
        normalize_name(record.full_name);
    } catch (const Error&) {
        throw Error(ErrorCode::MissingRequiredField,
                    "curriculum '" + record.id + "' has a name with no letters");
    }
    for (const auto& supervision : record.supervisions_given) {
        if (supervision.supervisee_name.empty()) {
            throw Error(ErrorCode::MissingRequiredField,
                        "curriculum '" + record.id + "' has a supervision without supervisee");
        }
    }
}

// ---------------------------------------------------------------- XML

std::string child_text(const pt::ptree& node, const char* key) {
    auto child = node.get_child_optional(key);
    return child ? trim(child->data()) : std::string{};
}

std::vector<std::string> xml_areas(const pt::ptree& node) {
    std::vector<std::string> out;
    auto areas = node.get_child_optional("areas");
    if (!areas) {
        return out;
    }
    for (const auto& [key, area] : *areas) {
        if (key == "area") {
            if (auto text = trim(area.data()); !text.empty()) {
                out.push_back(std::move(text));
            }
        }
    }
    return out;
}

std::string required_attr(const pt::ptree& node, const char* element, const char* attr) {
    auto value = node.get_optional<std::string>(std::string("<xmlattr>.") + attr);
    if (!value) {
        throw Error(ErrorCode::MissingRequiredField,
                    std::string("<") + element + "> without '" + attr + "' attribute");
    }
    return trim(*value);
}

ResearcherRecord parse_xml(std::string_view document) {
    pt::ptree tree;
    try {
        std::istringstream in{std::string(document)};
        pt::read_xml(in, tree, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("XML syntax error: ") + e.what());
    }
    auto root = tree.get_child_optional("curriculum");
    if (!root || tree.size() != 1) {
        throw Error(ErrorCode::MalformedDocument, "expected a single <curriculum> root element");
    }

    ResearcherRecord record;
    record.id = trim(root->get<std::string>("<xmlattr>.id", ""));
    record.full_name = child_text(*root, "name");
    record.citation_names = split_variants(child_text(*root, "citation-names"));
    record.institution = optional_text(child_text(*root, "institution"));
    record.areas = xml_areas(*root);
    record.resume = optional_text(child_text(*root, "resume"));

    if (auto degrees = root->get_child_optional("degrees")) {
        for (const auto& [key, node] : *degrees) {
            if (key != "degree") {
                continue;
            }
            DegreeEntry degree;
            auto level_text = required_attr(node, "degree", "level");
            auto level = parse_degree_level(level_text);
            if (!level) {
                throw Error(ErrorCode::MalformedDocument, "unknown degree level '" + level_text + "'");
            }
            degree.level = *level;
            degree.year = check_year(parse_year_text(required_attr(node, "degree", "year"), "degree"),
                                     "degree");
            degree.thesis_title = optional_text(child_text(node, "thesis"));
            degree.supervisor_name = child_text(node, "supervisor");
            degree.institution = optional_text(child_text(node, "institution"));
            degree.areas = xml_areas(node);
            record.degrees.push_back(std::move(degree));
        }
    }
    if (auto supervisions = root->get_child_optional("supervisions")) {
        for (const auto& [key, node] : *supervisions) {
            if (key != "supervision") {
                continue;
            }
            SupervisionEntry entry;
            auto level_text = required_attr(node, "supervision", "level");
            auto level = parse_supervision_level(level_text);
            if (!level) {
                throw Error(ErrorCode::MalformedDocument,
                            "unknown supervision level '" + level_text + "'");
            }
            entry.level = *level;
            entry.year = check_year(
                parse_year_text(required_attr(node, "supervision", "year"), "supervision"),
                "supervision");
            entry.supervisee_name = child_text(node, "supervisee");
            record.supervisions_given.push_back(std::move(entry));
        }
    }
    validate(record);
    return record;
}

void escape_xml(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
}

void xml_element(std::string& out, std::string_view indent, std::string_view tag,
                 std::string_view text) {
    out += indent;
    out += '<';
    out += tag;
    out += '>';
    escape_xml(out, text);
    out += "</";
    out += tag;
    out += ">\n";
}

void xml_areas_out(std::string& out, std::string_view indent,
                   const std::vector<std::string>& areas) {
    if (areas.empty()) {
        return;
    }
    out += indent;
    out += "<areas>\n";
    for (const auto& area : areas) {
        xml_element(out, std::string(indent) + "  ", "area", area);
    }
    out += indent;
    out += "</areas>\n";
}

// ---------------------------------------------------------------- JSON

std::string json_string(const json& object, const char* key, bool required = false) {
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
        if (required) {
            throw Error(ErrorCode::MissingRequiredField, std::string("missing field '") + key + "'");
        }
        return {};
    }
    if (!it->is_string()) {
        throw Error(ErrorCode::MalformedDocument, std::string("field '") + key + "' must be a string");
    }
    return trim(it->get<std::string>());
}

std::vector<std::string> json_string_list(const json& object, const char* key) {
    std::vector<std::string> out;
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
        return out;
    }
    if (!it->is_array()) {
        throw Error(ErrorCode::MalformedDocument, std::string("field '") + key + "' must be an array");
    }
    for (const auto& item : *it) {
        if (!item.is_string()) {
            throw Error(ErrorCode::MalformedDocument,
                        std::string("field '") + key + "' must hold strings");
        }
        if (auto text = trim(item.get<std::string>()); !text.empty()) {
            out.push_back(std::move(text));
        }
    }
    return out;
}

const json& json_array(const json& object, const char* key) {
    static const json empty = json::array();
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
        return empty;
    }
    if (!it->is_array()) {
        throw Error(ErrorCode::MalformedDocument, std::string("field '") + key + "' must be an array");
    }
    return *it;
}

int json_year(const json& object, std::string_view where) {
    auto it = object.find("year");
    if (it == object.end() || it->is_null()) {
        throw Error(ErrorCode::MissingRequiredField, std::string(where) + " without 'year'");
    }
    if (it->is_number_integer()) {
        auto value = it->get<long long>();
        if (value < kMinYear || value > max_accepted_year()) {
            throw Error(ErrorCode::InvalidYear,
                        std::string(where) + ": year " + std::to_string(value) + " out of range");
        }
        return static_cast<int>(value);
    }
    if (it->is_string()) {
        return check_year(parse_year_text(it->get<std::string>(), where), where);
    }
    throw Error(ErrorCode::InvalidYear, std::string(where) + ": year is not an integer");
}

ResearcherRecord parse_json(std::string_view document) {
    json object;
    try {
        object = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("JSON syntax error: ") + e.what());
    }
    if (!object.is_object()) {
        throw Error(ErrorCode::MalformedDocument, "curriculum row must be a JSON object");
    }

    ResearcherRecord record;
    record.id = json_string(object, "id", true);
    record.full_name = json_string(object, "name", true);
    if (auto it = object.find("citation_names"); it != object.end() && it->is_string()) {
        record.citation_names = split_variants(it->get<std::string>());
    } else {
        record.citation_names = json_string_list(object, "citation_names");
    }
    record.institution = optional_text(json_string(object, "institution"));
    record.areas = json_string_list(object, "areas");
    record.resume = optional_text(json_string(object, "resume"));

    for (const auto& node : json_array(object, "degrees")) {
        if (!node.is_object()) {
            throw Error(ErrorCode::MalformedDocument, "degree must be an object");
        }
        DegreeEntry degree;
        auto level_text = json_string(node, "level", true);
        auto level = parse_degree_level(level_text);
        if (!level) {
            throw Error(ErrorCode::MalformedDocument, "unknown degree level '" + level_text + "'");
        }
        degree.level = *level;
        degree.year = json_year(node, "degree");
        degree.thesis_title = optional_text(json_string(node, "thesis"));
        degree.supervisor_name = json_string(node, "supervisor");
        degree.institution = optional_text(json_string(node, "institution"));
        degree.areas = json_string_list(node, "areas");
        record.degrees.push_back(std::move(degree));
    }
    for (const auto& node : json_array(object, "supervisions")) {
        if (!node.is_object()) {
            throw Error(ErrorCode::MalformedDocument, "supervision must be an object");
        }
        SupervisionEntry entry;
        auto level_text = json_string(node, "level", true);
        auto level = parse_supervision_level(level_text);
        if (!level) {
            throw Error(ErrorCode::MalformedDocument,
                        "unknown supervision level '" + level_text + "'");
        }
        entry.level = *level;
        entry.year = json_year(node, "supervision");
        entry.supervisee_name = json_string(node, "supervisee");
        record.supervisions_given.push_back(std::move(entry));
    }
    validate(record);
    return record;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::MalformedDocument, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Loaded {
    ResearcherRecord record;
    std::string source;
};

void parse_jsonl_stream(std::istream& in, std::string_view source, std::vector<Loaded>& out,
                        LoadReport& report) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        ++report.documents_seen;
        auto where = std::string(source) + ":" + std::to_string(line_no);
        try {
            out.push_back({parse_curriculum(line, DocumentFormat::JSONL), where});
        } catch (const Error& e) {
            report.failures.push_back({where, e.code(), e.what()});
        }
    }
}

Corpus finish_corpus(std::vector<Loaded> loaded, LoadReport report) {
    std::sort(loaded.begin(), loaded.end(), [](const Loaded& a, const Loaded& b) {
        return std::tie(a.record.id, a.source) < std::tie(b.record.id, b.source);
    });
    for (std::size_t i = 1; i < loaded.size(); ++i) {
        if (loaded[i].record.id == loaded[i - 1].record.id) {
            throw Error(ErrorCode::DuplicateId, "id '" + loaded[i].record.id + "' declared by both " +
                                                    loaded[i - 1].source + " and " +
                                                    loaded[i].source);
        }
    }
    if (loaded.empty()) {
        throw Error(ErrorCode::EmptyCorpus, "corpus contains no valid curriculum");
    }
    Corpus corpus;
    corpus.records.reserve(loaded.size());
    for (auto& item : loaded) {
        corpus.records.push_back(std::move(item.record));
    }
    corpus.report = std::move(report);
    return corpus;
}

} // namespace

int max_accepted_year() {
    std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    return utc.tm_year + 1900 + 1;
}

std::string_view to_string(DegreeLevel level) {
    switch (level) {
        case DegreeLevel::MSC: return "MSC";
        case DegreeLevel::PHD: return "PHD";
        case DegreeLevel::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::string_view to_string(SupervisionLevel level) {
    return level == SupervisionLevel::MSC ? "MSC" : "PHD";
}

std::optional<DegreeLevel> parse_degree_level(std::string_view text) {
    if (text == "MSC") return DegreeLevel::MSC;
    if (text == "PHD") return DegreeLevel::PHD;
    if (text == "OTHER") return DegreeLevel::OTHER;
    return std::nullopt;
}

std::optional<SupervisionLevel> parse_supervision_level(std::string_view text) {
    if (text == "MSC") return SupervisionLevel::MSC;
    if (text == "PHD") return SupervisionLevel::PHD;
    return std::nullopt;
}

ResearcherRecord parse_curriculum(std::string_view document, DocumentFormat format) {
    return format == DocumentFormat::XML ? parse_xml(document) : parse_json(document);
}

std::string to_xml(const ResearcherRecord& record) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<curriculum id=\"";
    escape_xml(out, record.id);
    out += "\">\n";
    xml_element(out, "  ", "name", record.full_name);
    if (!record.citation_names.empty()) {
        std::string joined;
        for (const auto& variant : record.citation_names) {
            joined += joined.empty() ? "" : ";";
            joined += variant;
        }
        xml_element(out, "  ", "citation-names", joined);
    }
    if (record.institution) {
        xml_element(out, "  ", "institution", *record.institution);
    }
    xml_areas_out(out, "  ", record.areas);
    if (!record.degrees.empty()) {
        out += "  <degrees>\n";
        for (const auto& degree : record.degrees) {
            out += "    <degree level=\"";
            out += to_string(degree.level);
            out += "\" year=\"" + std::to_string(degree.year) + "\">\n";
            if (degree.thesis_title) {
                xml_element(out, "      ", "thesis", *degree.thesis_title);
            }
            xml_element(out, "      ", "supervisor", degree.supervisor_name);
            if (degree.institution) {
                xml_element(out, "      ", "institution", *degree.institution);
            }
            xml_areas_out(out, "      ", degree.areas);
            out += "    </degree>\n";
        }
        out += "  </degrees>\n";
    }
    if (!record.supervisions_given.empty()) {
        out += "  <supervisions>\n";
        for (const auto& entry : record.supervisions_given) {
            out += "    <supervision level=\"";
            out += to_string(entry.level);
            out += "\" year=\"" + std::to_string(entry.year) + "\">\n";
            xml_element(out, "      ", "supervisee", entry.supervisee_name);
            out += "    </supervision>\n";
        }
        out += "  </supervisions>\n";
    }
    if (record.resume) {
        xml_element(out, "  ", "resume", *record.resume);
    }
    out += "</curriculum>\n";
    return out;
}

std::string to_jsonl(const ResearcherRecord& record) {
    json object = {{"id", record.id}, {"name", record.full_name}};
    if (!record.citation_names.empty()) object["citation_names"] = record.citation_names;
    if (record.institution) object["institution"] = *record.institution;
    if (!record.areas.empty()) object["areas"] = record.areas;
    if (record.resume) object["resume"] = *record.resume;
    if (!record.degrees.empty()) {
        json degrees = json::array();
        for (const auto& degree : record.degrees) {
            json item = {{"level", to_string(degree.level)},
                         {"year", degree.year},
                         {"supervisor", degree.supervisor_name}};
            if (degree.thesis_title) item["thesis"] = *degree.thesis_title;
            if (degree.institution) item["institution"] = *degree.institution;
            if (!degree.areas.empty()) item["areas"] = degree.areas;
            degrees.push_back(std::move(item));
        }
        object["degrees"] = std::move(degrees);
    }
    if (!record.supervisions_given.empty()) {
        json supervisions = json::array();
        for (const auto& entry : record.supervisions_given) {
            supervisions.push_back({{"level", to_string(entry.level)},
                                    {"year", entry.year},
                                    {"supervisee", entry.supervisee_name}});
        }
        object["supervisions"] = std::move(supervisions);
    }
    return object.dump();
}

const ResearcherRecord* Corpus::find(std::string_view id) const {
    auto it = std::lower_bound(records.begin(), records.end(), id,
                               [](const ResearcherRecord& r, std::string_view key) { return r.id < key; });
    return it != records.end() && it->id == id ? &*it : nullptr;
}

Corpus load_corpus(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        throw Error(ErrorCode::EmptyCorpus, "corpus path " + path.string() + " does not exist");
    }

    std::vector<fs::path> files;
    fs::path root = path;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::recursive_directory_iterator(path)) {
            auto ext = entry.path().extension();
            if (entry.is_regular_file() && (ext == ".xml" || ext == ".jsonl")) {
                files.push_back(entry.path());
            }
        }
    } else {
        files.push_back(path);
        root = path.parent_path();
    }
    // Relative, generic paths keep the report independent of where the corpus lives.
    std::vector<std::pair<std::string, fs::path>> sources;
    for (const auto& file : files) {
        sources.emplace_back(fs::relative(file, root).generic_string(), file);
    }
    std::sort(sources.begin(), sources.end());

    std::vector<Loaded> loaded;
    LoadReport report;
    for (const auto& [source, file] : sources) {
        if (file.extension() == ".jsonl") {
            std::ifstream in(file, std::ios::binary);
            parse_jsonl_stream(in, source, loaded, report);
            continue;
        }
        ++report.documents_seen;
        try {
            loaded.push_back({parse_curriculum(read_file(file), DocumentFormat::XML), source});
        } catch (const Error& e) {
            report.failures.push_back({source, e.code(), e.what()});
        }
    }
    return finish_corpus(std::move(loaded), std::move(report));
}

Corpus load_corpus(std::istream& in, std::string_view source) {
    std::vector<Loaded> loaded;
    LoadReport report;
    parse_jsonl_stream(in, source, loaded, report);
    return finish_corpus(std::move(loaded), std::move(report));
}

} // namespace acadtree
