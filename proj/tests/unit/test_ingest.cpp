#include <acadtree/ingest.hpp>

#include "paths.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

namespace acadtree {
namespace {

using testing::fixtures_dir;
using testing::TempDir;

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << text;
}

ErrorCode code_of(const std::function<void()>& action) {
    try {
        action();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an acadtree::Error";
    return ErrorCode::MalformedDocument;
}

TEST(ParseCurriculum, MinimalDocumentHasEmptyLists) {
    auto record = parse_curriculum(R"(<curriculum id="X1"><name> Jane Roe </name></curriculum>)", DocumentFormat::XML);
    EXPECT_EQ(record.id, "X1");
    EXPECT_EQ(record.full_name, "Jane Roe");
    EXPECT_TRUE(record.degrees.empty());
    EXPECT_TRUE(record.supervisions_given.empty());
    EXPECT_TRUE(record.citation_names.empty());
    EXPECT_FALSE(record.institution.has_value());
    EXPECT_FALSE(record.resume.has_value());

    auto row = parse_curriculum(R"({"id": "X1", "name": "Jane Roe"})", DocumentFormat::JSONL);
    EXPECT_EQ(row, record);
}

TEST(ParseCurriculum, FixtureFieldsVerbatim) {
    auto record = parse_curriculum(slurp(fixtures_dir() / "parse/pavan_full.xml"), DocumentFormat::XML);
    EXPECT_EQ(record.id, "PAVAN01");
    EXPECT_EQ(record.full_name, "Crodowaldo Pavan");
    EXPECT_EQ(record.citation_names, (std::vector<std::string>{"PAVAN, C.", "Pavan, Crodowaldo"}));
    EXPECT_EQ(record.institution, "Universidade de São Paulo");
    EXPECT_EQ(record.areas, (std::vector<std::string>{"Ciências Biológicas", "Genética"}));

    ASSERT_EQ(record.degrees.size(), 1u);
    const auto& degree = record.degrees[0];
    EXPECT_EQ(degree.level, DegreeLevel::PHD);
    EXPECT_EQ(degree.year, 1944);
    EXPECT_EQ(degree.supervisor_name, "A. Dreyfus");
    EXPECT_EQ(degree.thesis_title, "Os peixes cegos das cavernas de Iporanga");
    EXPECT_EQ(degree.institution, "Universidade de São Paulo");

    ASSERT_EQ(record.supervisions_given.size(), 1u);
    EXPECT_EQ(record.supervisions_given[0].level, SupervisionLevel::PHD);
    EXPECT_EQ(record.supervisions_given[0].year, 1955);
    EXPECT_EQ(record.supervisions_given[0].supervisee_name, "Helena Marís Duarte");
    ASSERT_TRUE(record.resume.has_value());
}

TEST(ParseCurriculum, XmlAndJsonlProduceIdenticalRecords) {
    auto xml = parse_curriculum(slurp(fixtures_dir() / "parse/pavan_full.xml"), DocumentFormat::XML);
    auto line = slurp(fixtures_dir() / "parse/pavan_full.jsonl");
    auto jsonl = parse_curriculum(line.substr(0, line.find('\n')), DocumentFormat::JSONL);
    EXPECT_EQ(xml, jsonl);
}

TEST(ParseCurriculum, TruncatedDocumentIsMalformed) {
    auto full = slurp(fixtures_dir() / "parse/pavan_full.xml");
    for (std::size_t cut : {full.size() / 3, full.size() / 2, full.size() - 20}) {
        EXPECT_EQ(code_of([&] { parse_curriculum(full.substr(0, cut), DocumentFormat::XML); }),
                  ErrorCode::MalformedDocument)
            << "cut at " << cut;
    }
    EXPECT_EQ(code_of([] { parse_curriculum(R"({"id": "X1", "name": "Ja)", DocumentFormat::JSONL); }),
              ErrorCode::MalformedDocument);
}

TEST(ParseCurriculum, WrongRootIsMalformed) {
    EXPECT_EQ(code_of([] { parse_curriculum("<person id=\"a\"><name>x</name></person>", DocumentFormat::XML); }),
              ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of([] { parse_curriculum("[1, 2]", DocumentFormat::JSONL); }), ErrorCode::MalformedDocument);
}

TEST(ParseCurriculum, MissingIdOrName) {
    EXPECT_EQ(code_of([] { parse_curriculum("<curriculum><name>x</name></curriculum>", DocumentFormat::XML); }),
              ErrorCode::MissingRequiredField);
    EXPECT_EQ(code_of([] { parse_curriculum("<curriculum id=\"a\"><name>  </name></curriculum>", DocumentFormat::XML); }),
              ErrorCode::MissingRequiredField);
    EXPECT_EQ(code_of([] { parse_curriculum(R"({"name": "x"})", DocumentFormat::JSONL); }),
              ErrorCode::MissingRequiredField);
    EXPECT_EQ(code_of([] { parse_curriculum(R"({"id": "a"})", DocumentFormat::JSONL); }),
              ErrorCode::MissingRequiredField);
}

TEST(ParseCurriculum, InvalidYears) {
    auto doc = [](const std::string& year) {
        return "<curriculum id=\"a\"><name>x y</name><degrees><degree level=\"PHD\" year=\"" + year +
               "\"><supervisor>z</supervisor></degree></degrees></curriculum>";
    };
    for (const char* bad : {"19x4", "1899", "", "1944.5", "99999"}) {
        EXPECT_EQ(code_of([&] { parse_curriculum(doc(bad), DocumentFormat::XML); }), ErrorCode::InvalidYear)
            << "year '" << bad << "'";
    }
    auto next_year = std::to_string(max_accepted_year());
    EXPECT_NO_THROW(parse_curriculum(doc(next_year), DocumentFormat::XML));
    EXPECT_EQ(code_of([&] { parse_curriculum(doc(std::to_string(max_accepted_year() + 1)), DocumentFormat::XML); }),
              ErrorCode::InvalidYear);
    EXPECT_NO_THROW(parse_curriculum(doc("1900"), DocumentFormat::XML));

    EXPECT_EQ(code_of([] {
                  parse_curriculum(R"({"id":"a","name":"x","supervisions":[{"level":"PHD","year":1800,"supervisee":"b"}]})",
                                   DocumentFormat::JSONL);
              }),
              ErrorCode::InvalidYear);
    EXPECT_EQ(code_of([] {
                  parse_curriculum(R"({"id":"a","name":"x","supervisions":[{"level":"PHD","year":1990.5,"supervisee":"b"}]})",
                                   DocumentFormat::JSONL);
              }),
              ErrorCode::InvalidYear);
}

TEST(ParseCurriculum, UnknownLevelAndEmptySupervisee) {
    EXPECT_EQ(code_of([] {
                  parse_curriculum(R"({"id":"a","name":"x","supervisions":[{"level":"OTHER","year":1990,"supervisee":"b"}]})",
                                   DocumentFormat::JSONL);
              }),
              ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of([] {
                  parse_curriculum(R"({"id":"a","name":"x","supervisions":[{"level":"PHD","year":1990,"supervisee":" "}]})",
                                   DocumentFormat::JSONL);
              }),
              ErrorCode::MissingRequiredField);
}

TEST(ParseCurriculum, EscapedXmlTextAndSemicolonVariants) {
    auto record = parse_curriculum(
        "<curriculum id=\"a&amp;b\"><name>Ana &amp; Bia</name>"
        "<citation-names> SILVA, A. ; ;Silva, Ana </citation-names></curriculum>",
        DocumentFormat::XML);
    EXPECT_EQ(record.id, "a&b");
    EXPECT_EQ(record.full_name, "Ana & Bia");
    EXPECT_EQ(record.citation_names, (std::vector<std::string>{"SILVA, A.", "Silva, Ana"}));

    auto row = parse_curriculum(R"({"id":"a","name":"x","citation_names":"SILVA, A.;Silva, Ana"})", DocumentFormat::JSONL);
    EXPECT_EQ(row.citation_names, (std::vector<std::string>{"SILVA, A.", "Silva, Ana"}));
}

// Records in the expressible subset: trimmed, non-empty strings; optional
// fields absent rather than empty; variants free of ';'.
ResearcherRecord random_record(std::mt19937_64& rng) {
    static const std::vector<std::string> words = {"Ana", "São", "<b>", "R&D", "O'Neil", "\"q\"", "Ümit",
                                                   "Paulo", "x", "da", "Łukasz", "Zoë"};
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), small(0, 3);
    std::uniform_int_distribution<int> year(kMinYear, max_accepted_year());
    std::bernoulli_distribution coin(0.5);
    auto phrase = [&] {
        std::string out = words[pick(rng)];
        for (auto n = small(rng); n > 0; --n) out += " " + words[pick(rng)];
        return out;
    };
    auto maybe = [&]() -> std::optional<std::string> {
        if (coin(rng)) return phrase();
        return std::nullopt;
    };
    ResearcherRecord r;
    r.id = "id-" + std::to_string(rng() % 100000);
    r.full_name = phrase();
    for (auto n = small(rng); n > 0; --n) r.citation_names.push_back(phrase());
    r.institution = maybe();
    for (auto n = small(rng); n > 0; --n) r.areas.push_back(phrase());
    for (auto n = small(rng); n > 0; --n) {
        DegreeEntry d;
        d.level = static_cast<DegreeLevel>(rng() % 3);
        d.year = year(rng);
        d.thesis_title = maybe();
        d.supervisor_name = coin(rng) ? phrase() : std::string{};
        d.institution = maybe();
        for (auto k = small(rng); k > 0; --k) d.areas.push_back(phrase());
        r.degrees.push_back(std::move(d));
    }
    for (auto n = small(rng); n > 0; --n) {
        r.supervisions_given.push_back(
            {coin(rng) ? SupervisionLevel::MSC : SupervisionLevel::PHD, year(rng), phrase()});
    }
    r.resume = maybe();
    return r;
}

TEST(ParseCurriculumProperty, RoundTripsThroughBothFormats) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        auto record = random_record(rng);
        ASSERT_EQ(parse_curriculum(to_xml(record), DocumentFormat::XML), record) << to_xml(record);
        ASSERT_EQ(parse_curriculum(to_jsonl(record), DocumentFormat::JSONL), record) << to_jsonl(record);
    }
}

TEST(LoadCorpus, ThreeDocumentsSortedById) {
    TempDir dir("corpus3");
    write(dir / "zeta.xml", R"(<curriculum id="C3"><name>Carla</name></curriculum>)");
    write(dir / "alpha.xml", R"(<curriculum id="C2"><name>Bia</name></curriculum>)");
    write(dir / "nested/rows.jsonl", "{\"id\":\"C1\",\"name\":\"Ana\"}\n");
    auto corpus = load_corpus(dir.path());
    ASSERT_EQ(corpus.records.size(), 3u);
    EXPECT_EQ(corpus.records[0].id, "C1");
    EXPECT_EQ(corpus.records[1].id, "C2");
    EXPECT_EQ(corpus.records[2].id, "C3");
    EXPECT_EQ(corpus.report.documents_seen, 3u);
    EXPECT_TRUE(corpus.report.failures.empty());
    EXPECT_NE(corpus.find("C2"), nullptr);
    EXPECT_EQ(corpus.find("C4"), nullptr);
}

TEST(LoadCorpus, DuplicateIdNamesBothFiles) {
    TempDir dir("dup");
    write(dir / "first.xml", R"(<curriculum id="X1"><name>Ana</name></curriculum>)");
    write(dir / "second.xml", R"(<curriculum id="X1"><name>Bia</name></curriculum>)");
    try {
        load_corpus(dir.path());
        FAIL() << "expected DuplicateId";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateId);
        std::string message = e.what();
        EXPECT_NE(message.find("first.xml"), std::string::npos) << message;
        EXPECT_NE(message.find("second.xml"), std::string::npos) << message;
    }
}

TEST(LoadCorpus, EmptyDirectory) {
    TempDir dir("empty");
    EXPECT_EQ(code_of([&] { load_corpus(dir.path()); }), ErrorCode::EmptyCorpus);
}

TEST(LoadCorpus, PerFileFailuresDoNotAbort) {
    TempDir dir("dirty");
    write(dir / "good.xml", R"(<curriculum id="G"><name>Good</name></curriculum>)");
    write(dir / "broken.xml", R"(<curriculum id="B"><name>Bro)");
    write(dir / "rows.jsonl", "{\"id\":\"J1\",\"name\":\"Joana\"}\n\n{\"id\":\"J2\"}\n{\"id\":\"J3\",\"name\":\"x\",\"degrees\":[{\"level\":\"PHD\",\"year\":1492,\"supervisor\":\"y\"}]}\n");
    write(dir / "notes.txt", "ignored");
    auto corpus = load_corpus(dir.path());
    ASSERT_EQ(corpus.records.size(), 2u);
    EXPECT_EQ(corpus.records[0].id, "G");
    EXPECT_EQ(corpus.records[1].id, "J1");
    EXPECT_EQ(corpus.report.documents_seen, 5u);
    ASSERT_EQ(corpus.report.failures.size(), 3u);
    EXPECT_EQ(corpus.report.failures[0].source, "broken.xml");
    EXPECT_EQ(corpus.report.failures[0].code, ErrorCode::MalformedDocument);
    EXPECT_EQ(corpus.report.failures[1].source, "rows.jsonl:3");
    EXPECT_EQ(corpus.report.failures[1].code, ErrorCode::MissingRequiredField);
    EXPECT_EQ(corpus.report.failures[2].source, "rows.jsonl:4");
    EXPECT_EQ(corpus.report.failures[2].code, ErrorCode::InvalidYear);
}

TEST(LoadCorpus, AllDocumentsFailingIsEmptyCorpus) {
    TempDir dir("allbad");
    write(dir / "a.xml", "<curriculum");
    EXPECT_EQ(code_of([&] { load_corpus(dir.path()); }), ErrorCode::EmptyCorpus);
}

TEST(LoadCorpus, OrderIndependentOfEnumeration) {
    auto reference = load_corpus(fixtures_dir() / "pavan");

    // Same records, different file names and creation order, one JSONL file.
    std::mt19937_64 rng(99);
    auto shuffled = reference.records;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    TempDir dir("shuffled");
    std::string rows;
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
        if (i % 2 == 0) {
            write(dir / ("f" + std::to_string(shuffled.size() - i) + ".xml"), to_xml(shuffled[i]));
        } else {
            rows += to_jsonl(shuffled[i]) + "\n";
        }
    }
    write(dir / "rest.jsonl", rows);
    EXPECT_EQ(load_corpus(dir.path()).records, reference.records);

    std::istringstream stream(rows);
    auto from_stream = load_corpus(stream, "stdin");
    EXPECT_TRUE(std::is_sorted(from_stream.records.begin(), from_stream.records.end(),
                               [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST(LoadCorpus, SingleFilePath) {
    auto corpus = load_corpus(fixtures_dir() / "g1/g1.jsonl");
    EXPECT_EQ(corpus.records.size(), 6u);
    EXPECT_EQ(corpus.records.front().id, "A");
}

} // namespace
} // namespace acadtree
