// Copyright 2026 The qmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmub/serialize.h"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qmub {

OutputFormat parse_format(const std::string &name) {
    if (name == "json") {
        return OutputFormat::kJson;
    }
    if (name == "csv") {
        return OutputFormat::kCsv;
    }
    if (name == "pretty") {
        return OutputFormat::kPretty;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or pretty)");
}

Json to_json(const OutputDocument &doc) {
    return Json{{"schema_version", doc.schema_version}, {"command", doc.command}, {"payload", doc.payload}};
}

OutputDocument document_from_json(const Json &j) {
    OutputDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.command = j.at("command");
    doc.payload = j.at("payload");
    return doc;
}

std::string emit_json(const OutputDocument &doc) {
    return to_json(doc).dump(2) + "\n";
}

OutputDocument parse_document(const std::string &text) {
    return document_from_json(Json::parse(text));
}

Json phase_matrix_to_json(const PhaseMatrix &m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); i++) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); j++) {
            const auto &e = m.at(i, j);
            if (e) {
                row.push_back(Json::array({e->turns().numerator(), e->turns().denominator()}));
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(row);
    }
    return Json{{"type", "phase_matrix"},
                {"dim", m.dim()},
                {"amplitude", m.amplitude() == Amplitude::kOne ? "1" : "1/sqrt(dim)"},
                {"entries", rows}};
}

PhaseMatrix phase_matrix_from_json(const Json &j) {
    if (j.at("type") != "phase_matrix") {
        throw std::invalid_argument("not a phase_matrix payload");
    }
    int dim = j.at("dim").get<int>();
    std::string amp = j.at("amplitude").get<std::string>();
    Amplitude amplitude;
    if (amp == "1") {
        amplitude = Amplitude::kOne;
    } else if (amp == "1/sqrt(dim)") {
        amplitude = Amplitude::kInvSqrtDim;
    } else {
        throw std::invalid_argument("unknown amplitude tag '" + amp + "'");
    }
    PhaseMatrix m(dim, amplitude);
    const Json &rows = j.at("entries");
    if (!rows.is_array() || (int)rows.size() != dim) {
        throw std::invalid_argument("phase_matrix entries have the wrong shape");
    }
    for (int i = 0; i < dim; i++) {
        if (!rows[i].is_array() || (int)rows[i].size() != dim) {
            throw std::invalid_argument("phase_matrix entries have the wrong shape");
        }
        for (int c = 0; c < dim; c++) {
            const Json &e = rows[i][c];
            if (e.is_null()) {
                continue;
            }
            m.set(i, c, ExactPhase::from_fraction(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()));
        }
    }
    return m;
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json complex_vector_to_json(const ComplexVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

Json complex_matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return Json{{"type", "complex_matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ComplexMatrix complex_matrix_from_json(const Json &j) {
    if (j.at("type") != "complex_matrix") {
        throw std::invalid_argument("not a complex_matrix payload");
    }
    auto rows = j.at("rows").get<Eigen::Index>();
    auto cols = j.at("cols").get<Eigen::Index>();
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; i++) {
        for (Eigen::Index c = 0; c < cols; c++) {
            const Json &e = j.at("entries").at(i).at(c);
            m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

std::string to_csv(const ComplexMatrix &m) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (Eigen::Index j = 0; j < m.cols(); j++) {
        out << (j ? "," : "") << "re,im";
    }
    out << "\n";
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            out << (j ? "," : "") << m(i, j).real() << "," << m(i, j).imag();
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string phase_token(const ExactPhase &p, int dim) {
    Rational k = p.turns() * Rational(dim);
    if (k.denominator() == 1) {
        if (k.numerator() == 0) {
            return "1";
        }
        if (k.numerator() == 1) {
            return "q";
        }
        return "q^" + std::to_string(k.numerator());
    }
    return "q^(" + to_string(k) + ")";
}

}  // namespace

std::string pretty(const PhaseMatrix &m) {
    std::vector<std::vector<std::string>> cells(m.dim(), std::vector<std::string>(m.dim()));
    size_t width = 1;
    for (int i = 0; i < m.dim(); i++) {
        for (int j = 0; j < m.dim(); j++) {
            cells[i][j] = m.at(i, j) ? phase_token(*m.at(i, j), m.dim()) : "0";
            width = std::max(width, cells[i][j].size());
        }
    }
    std::ostringstream out;
    out << "q = exp(2*pi*i/" << m.dim() << ")\n";
    if (m.amplitude() == Amplitude::kInvSqrtDim) {
        out << "scale 1/sqrt(" << m.dim() << ")\n";
    }
    for (const auto &row : cells) {
        out << "[";
        for (size_t j = 0; j < row.size(); j++) {
            out << (j ? " " : "") << std::setw((int)width) << row[j];
        }
        out << "]\n";
    }
    return out.str();
}

std::string pretty(const ComplexMatrix &m) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        out << "[";
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            double re = m(i, j).real(), im = m(i, j).imag();
            out << (j ? "  " : "") << std::setw(9) << re << (im < 0 ? " - " : " + ") << std::setw(8) << std::abs(im)
                << "i";
        }
        out << "]\n";
    }
    return out.str();
}

ComplexVector parse_signal(const std::string &text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::runtime_error("signal input is empty");
    }
    std::vector<Complex> values;
    if (text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error &e) {
            throw std::runtime_error(std::string("signal JSON is malformed: ") + e.what());
        }
        if (!j.is_array()) {
            throw std::runtime_error("signal JSON must be an array of [re, im] pairs");
        }
        for (const auto &e : j) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw std::runtime_error("signal JSON entries must be [re, im] number pairs");
            }
            values.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
    } else {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            line_no++;
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            auto comma = line.find(',');
            if (comma == std::string::npos) {
                throw std::runtime_error("signal CSV line " + std::to_string(line_no) + " is not a re,im pair");
            }
            try {
                size_t used_re = 0, used_im = 0;
                std::string re_s = line.substr(0, comma), im_s = line.substr(comma + 1);
                double re = std::stod(re_s, &used_re);
                double im = std::stod(im_s, &used_im);
                if (im_s.find_first_not_of(" \t\r", used_im) != std::string::npos ||
                    re_s.find_first_not_of(" \t\r", used_re) != std::string::npos) {
                    throw std::invalid_argument("trailing text");
                }
                values.emplace_back(re, im);
            } catch (const std::exception &) {
                if (line_no == 1 && values.empty()) {
                    continue;  // header
                }
                throw std::runtime_error("signal CSV line " + std::to_string(line_no) + " is not a re,im pair");
            }
        }
    }
    if (values.empty()) {
        throw std::runtime_error("signal input has no samples");
    }
    ComplexVector v((Eigen::Index)values.size());
    for (size_t i = 0; i < values.size(); i++) {
        v((Eigen::Index)i) = values[i];
    }
    return v;
}

ComplexVector read_signal_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open signal file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_signal(buf.str());
}

}  // namespace qmub
