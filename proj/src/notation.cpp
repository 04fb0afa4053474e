#include "semicross/notation.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "semicross/error.hpp"

namespace semicross {

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, std::size_t rank)
          : _text(text), _rank(rank), _used(rank + 1, false) {}

      PartialBijection parse() {
        skip_ws();
        if (_pos < _text.size() && (_text[_pos] == 'e' || _text[_pos] == '0')) {
          char const c = _text[_pos++];
          skip_ws();
          if (_pos != _text.size()) {
            throw ParseError("unexpected trailing input", _pos);
          }
          return c == 'e' ? PartialBijection::identity(_rank)
                          : PartialBijection(_rank);
        }
        auto result = PartialBijection::identity(_rank);
        bool any    = false;
        while (true) {
          skip_ws();
          if (_pos == _text.size()) {
            break;
          }
          char const open = _text[_pos];
          if (open != '(' && open != '[') {
            throw ParseError(std::string("expected '(' or '[' but found '") + open
                                 + "'",
                             _pos);
          }
          ++_pos;
          auto const points = parse_points(open == '(' ? ')' : ']');
          result = compose(result, open == '(' ? cycle(_rank, points)
                                               : chain(_rank, points));
          any = true;
        }
        if (!any) {
          throw ParseError("empty element", _pos);
        }
        return result;
      }

     private:
      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::vector<Point> parse_points(char close) {
        std::vector<Point> points;
        while (true) {
          skip_ws();
          if (_pos == _text.size()) {
            throw ParseError(std::string("missing '") + close + "'", _pos);
          }
          if (_text[_pos] == close) {
            if (points.empty()) {
              throw ParseError("empty term", _pos);
            }
            ++_pos;
            return points;
          }
          if (!std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            throw ParseError(std::string("unexpected character '") + _text[_pos]
                                 + "'",
                             _pos);
          }
          std::size_t const start = _pos;
          unsigned long     value = 0;
          while (_pos < _text.size()
                 && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            value = value * 10 + static_cast<unsigned long>(_text[_pos] - '0');
            if (value > _rank) {
              break;
            }
            ++_pos;
          }
          if (value == 0 || value > _rank) {
            throw ParseError("point out of range 1.." + std::to_string(_rank),
                             start);
          }
          if (_used[value]) {
            throw ParseError("point " + std::to_string(value)
                                 + " appears in more than one place",
                             start);
          }
          _used[value] = true;
          points.push_back(static_cast<Point>(value));
        }
      }

      std::string_view  _text;
      std::size_t       _rank;
      std::size_t       _pos = 0;
      std::vector<bool> _used;
    };

    void append_term(std::string& out, std::vector<Point> const& points,
                     char open, char close) {
      out += open;
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += std::to_string(points[i]);
      }
      out += close;
    }
  }  // namespace

  PartialBijection parse_element(std::string_view text, std::size_t rank) {
    return Parser(text, rank).parse();
  }

  std::string format_decomposition(ChainDecomposition const& d) {
    if (d.cycles.empty() && d.chains.empty()) {
      return "e";
    }
    std::string out;
    for (auto const& c : d.cycles) {
      append_term(out, c, '(', ')');
    }
    for (auto const& c : d.chains) {
      append_term(out, c, '[', ']');
    }
    return out;
  }

  std::string format_element(PartialBijection const& a) {
    if (a.rank() > 0 && a.domain_size() == 0) {
      return "0";
    }
    return format_decomposition(chain_decomposition(a));
  }

}  // namespace semicross
