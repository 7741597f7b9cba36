#include "parser.hpp"

#include "errors.hpp"
#include "lexer.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace oodq {

namespace {

struct ParseFail {
  int line;
  std::string message;
};

[[noreturn]] void fail_here(int line, std::string message) {
  throw ParseFail{line, std::move(message)};
}

bool is_primitive(const std::string& word) {
  static const std::set<std::string> prims{"boolean", "byte", "char", "double",
                                           "float",   "int",  "long", "short"};
  return prims.count(word) > 0;
}

bool is_modifier(const std::string& word) {
  static const std::set<std::string> mods{
      "public", "protected", "private", "static", "abstract", "final",
      "native", "synchronized", "transient", "volatile", "strictfp", "default"};
  return mods.count(word) > 0;
}

std::string simple_of(const std::string& dotted) {
  auto pos = dotted.rfind('.');
  return pos == std::string::npos ? dotted : dotted.substr(pos + 1);
}

// Per-method parsing state: local/parameter scope for shadowing checks,
// deferred receiver fixups, and attribute-reference candidates filtered
// against the field list once the class is complete.
struct MethodScope {
  MethodModel* method = nullptr;
  std::map<std::string, std::string> locals; // name -> declared type name
  std::set<std::string> attr_candidates;
  std::vector<std::pair<int, std::string>> bare_receiver_patches;  // call -> name
  std::vector<std::pair<int, std::string>> field_receiver_patches; // call -> this.name
};

struct Modifiers {
  Visibility visibility = Visibility::Package;
  bool has_visibility = false;
  bool is_static = false;
  bool is_abstract = false;
  bool is_default = false;
};

class UnitParser {
public:
  UnitParser(const SourceFile& file, ParseResult& out)
      : file_(file), out_(out), tokens_(tokenize(file.text)) {}

  void run() {
    try {
      parse_package();
      parse_imports();
      while (!at_end()) {
        if (accept_punct(";")) continue;
        try {
          parse_type_declaration("");
        } catch (const ParseFail& f) {
          error(f.line, f.message);
          class_stack_.clear();
          recover();
          if (check_punct("}")) advance(); // stray close at top level
        }
      }
    } catch (const ParseFail& f) {
      error(f.line, f.message);
    }
  }

private:
  struct ClassCtx {
    std::string qualified;
    std::vector<std::string> supertype_names;
    std::vector<MethodScope> scopes; // one per method, in declaration order
  };

  // ---- token primitives ----
  const Token& peek(int ahead = 0) const {
    std::size_t idx = pos_ + static_cast<std::size_t>(ahead);
    return idx < tokens_.size() ? tokens_[idx] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokenKind::End; }
  int line() const { return peek().line; }

  bool check_punct(const char* p, int ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Punct && t.text == p;
  }
  bool check_keyword(const char* k, int ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Keyword && t.text == k;
  }
  bool accept_punct(const char* p) {
    if (!check_punct(p)) return false;
    advance();
    return true;
  }
  bool accept_keyword(const char* k) {
    if (!check_keyword(k)) return false;
    advance();
    return true;
  }
  void expect_punct(const char* p) {
    if (!accept_punct(p)) fail_here(line(), std::string("expected '") + p + "'");
  }
  std::string expect_identifier() {
    if (peek().kind != TokenKind::Identifier) fail_here(line(), "expected identifier");
    return advance().text;
  }

  void error(int at_line, const std::string& message) {
    out_.diagnostics.push_back(
        {file_.path, at_line, message, ParseDiagnostic::Severity::Error});
  }
  void warning(int at_line, const std::string& message) {
    out_.diagnostics.push_back(
        {file_.path, at_line, message, ParseDiagnostic::Severity::Warning});
  }

  // Skip to the next `;` at depth 0 or up to (not consuming) a `}` that
  // closes the enclosing scope.
  void recover() {
    int depth = 0;
    while (!at_end()) {
      if (check_punct("{")) {
        ++depth;
      } else if (check_punct("}")) {
        if (depth == 0) return;
        --depth;
        advance();
        if (depth == 0) return;
        continue;
      } else if (check_punct(";") && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  void skip_balanced(const char* open, const char* close) {
    expect_punct(open);
    int depth = 1;
    while (!at_end() && depth > 0) {
      if (check_punct(open)) ++depth;
      else if (check_punct(close)) --depth;
      advance();
    }
  }

  // ---- headers ----
  void parse_package() {
    if (!accept_keyword("package")) return;
    package_ = expect_identifier();
    while (accept_punct(".")) package_ += "." + expect_identifier();
    expect_punct(";");
  }

  void parse_imports() {
    for (;;) {
      skip_annotations();
      if (!accept_keyword("import")) break;
      accept_keyword("static");
      while (!at_end() && !check_punct(";")) advance();
      expect_punct(";");
    }
  }

  void skip_annotations() {
    while (check_punct("@") && peek(1).kind == TokenKind::Identifier) {
      advance();
      expect_identifier();
      while (accept_punct(".")) expect_identifier();
      if (check_punct("(")) skip_balanced("(", ")");
    }
  }

  Modifiers parse_modifiers() {
    Modifiers mods;
    for (;;) {
      skip_annotations();
      const Token& t = peek();
      if (t.kind != TokenKind::Keyword || !is_modifier(t.text)) break;
      if (t.text == "public") { mods.visibility = Visibility::Public; mods.has_visibility = true; }
      else if (t.text == "protected") { mods.visibility = Visibility::Protected; mods.has_visibility = true; }
      else if (t.text == "private") { mods.visibility = Visibility::Private; mods.has_visibility = true; }
      else if (t.text == "static") mods.is_static = true;
      else if (t.text == "abstract") mods.is_abstract = true;
      else if (t.text == "default") mods.is_default = true;
      advance();
    }
    return mods;
  }

  // Skips a balanced `<...>` region; the lexer may fuse closers into
  // >> / >>> tokens.
  void skip_type_arguments() {
    if (!check_punct("<")) return;
    advance();
    int depth = 1;
    while (!at_end() && depth > 0) {
      if (check_punct("<")) ++depth;
      else if (check_punct(">")) --depth;
      else if (check_punct(">>")) depth -= 2;
      else if (check_punct(">>>")) depth -= 3;
      advance();
    }
  }

  // Type in declaration context: dotted name with generic arguments
  // stripped; array brackets and varargs dropped.
  std::string parse_type_name() {
    const Token& t = peek();
    if (t.kind == TokenKind::Keyword && (is_primitive(t.text) || t.text == "void")) {
      std::string name = advance().text;
      while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
      return name;
    }
    std::string name = expect_identifier();
    skip_type_arguments();
    while (check_punct(".") && peek(1).kind == TokenKind::Identifier) {
      advance();
      name += "." + expect_identifier();
      skip_type_arguments();
    }
    while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
    accept_punct("...");
    return name;
  }

  // Lookahead: does a local-variable declaration start here?
  bool looks_like_declaration() const {
    std::size_t p = pos_;
    auto tok = [&](std::size_t i) -> const Token& {
      return i < tokens_.size() ? tokens_[i] : tokens_.back();
    };
    if (tok(p).kind == TokenKind::Keyword && tok(p).text == "final") ++p;
    if (tok(p).kind == TokenKind::Keyword && is_primitive(tok(p).text)) return true;
    if (tok(p).kind != TokenKind::Identifier) return false;
    ++p;
    while (tok(p).kind == TokenKind::Punct && tok(p).text == "." &&
           tok(p + 1).kind == TokenKind::Identifier)
      p += 2;
    if (tok(p).kind == TokenKind::Punct && tok(p).text == "<") {
      int depth = 1;
      ++p;
      while (depth > 0) {
        const Token& t = tok(p);
        if (t.kind == TokenKind::End) return false;
        if (t.kind == TokenKind::Punct) {
          if (t.text == "<") ++depth;
          else if (t.text == ">") --depth;
          else if (t.text == ">>") depth -= 2;
          else if (t.text == ">>>") depth -= 3;
          else if (t.text != "," && t.text != "." && t.text != "?" &&
                   t.text != "[" && t.text != "]" && t.text != "&")
            return false; // content is not type-argument shaped
        } else if (t.kind != TokenKind::Identifier &&
                   !(t.kind == TokenKind::Keyword &&
                     (is_primitive(t.text) || t.text == "extends" || t.text == "super"))) {
          return false;
        }
        ++p;
      }
    }
    while (tok(p).kind == TokenKind::Punct && tok(p).text == "[" &&
           tok(p + 1).kind == TokenKind::Punct && tok(p + 1).text == "]")
      p += 2;
    return tok(p).kind == TokenKind::Identifier;
  }

  // ---- type declarations ----
  void parse_type_declaration(const std::string& outer_prefix) {
    skip_annotations();
    int start_line = line();
    parse_modifiers();

    ClassKind kind;
    if (accept_keyword("class")) kind = ClassKind::Class;
    else if (accept_keyword("interface")) kind = ClassKind::Interface;
    else if (accept_keyword("enum")) kind = ClassKind::Enum;
    else fail_here(line(), "expected class, interface or enum declaration");

    std::string name = expect_identifier();
    skip_type_arguments();

    ClassModel cls;
    cls.kind = kind;
    cls.line_span.start = start_line;
    std::string flat = outer_prefix.empty() ? name : outer_prefix + "." + name;
    cls.qualified_name = package_.empty() ? flat : package_ + "." + flat;

    if (accept_keyword("extends")) {
      do {
        std::string st = parse_type_name();
        if (kind != ClassKind::Enum) cls.supertypes.push_back(TypeRef{st, {}});
      } while (kind == ClassKind::Interface && accept_punct(","));
    }
    if (accept_keyword("implements")) {
      do {
        std::string st = parse_type_name();
        if (kind != ClassKind::Enum) cls.supertypes.push_back(TypeRef{st, {}});
      } while (accept_punct(","));
    }

    class_stack_.push_back(ClassCtx{cls.qualified_name, {}, {}});
    for (const TypeRef& st : cls.supertypes)
      class_stack_.back().supertype_names.push_back(st.name);

    expect_punct("{");
    if (kind == ClassKind::Enum) parse_enum_constants(cls);
    const std::size_t stack_depth = class_stack_.size();
    while (!at_end() && !check_punct("}")) {
      try {
        parse_member(cls, flat, name);
      } catch (const ParseFail& f) {
        error(f.line, f.message);
        while (class_stack_.size() > stack_depth) class_stack_.pop_back();
        recover();
      }
    }
    cls.line_span.end = line();
    expect_punct("}");
    finalize_class(cls);
    class_stack_.pop_back();
    cls.line_tally = classify_line_range(file_.text, cls.line_span.start, cls.line_span.end);
    out_.classes.push_back(std::move(cls));
  }

  void parse_enum_constants(ClassModel& cls) {
    for (;;) {
      skip_annotations();
      if (peek().kind != TokenKind::Identifier) break;
      if (!(check_punct(",", 1) || check_punct(";", 1) || check_punct("(", 1) ||
            check_punct("{", 1) || check_punct("}", 1)))
        break; // not a constant list; regular members follow
      std::string constant = expect_identifier();
      AttributeModel attr;
      attr.name = constant;
      attr.declared_type = TypeRef{cls.simple_name(), {}};
      attr.visibility = Visibility::Public;
      attr.is_static = true;
      add_attribute(cls, std::move(attr));
      if (check_punct("(")) skip_balanced("(", ")");
      if (check_punct("{")) skip_balanced("{", "}");
      if (accept_punct(",")) continue;
      accept_punct(";");
      break;
    }
  }

  void parse_member(ClassModel& cls, const std::string& flat, const std::string& simple) {
    if (accept_punct(";")) return;
    int start_line = line();
    if (check_punct("{")) { // instance initializer
      skip_balanced("{", "}");
      return;
    }
    skip_annotations();
    Modifiers mods = parse_modifiers();
    if (check_punct("{")) { // static initializer
      skip_balanced("{", "}");
      return;
    }
    if (check_keyword("class") || check_keyword("interface") || check_keyword("enum")) {
      parse_type_declaration(flat);
      return;
    }
    if (check_punct("<")) skip_type_arguments(); // generic method

    bool iface = cls.kind == ClassKind::Interface;
    Visibility vis = mods.has_visibility ? mods.visibility
                                         : (iface ? Visibility::Public : Visibility::Package);

    // Constructor: bare class name followed by a parameter list.
    if (peek().kind == TokenKind::Identifier && peek().text == simple && check_punct("(", 1)) {
      MethodModel method;
      method.name = advance().text;
      method.is_constructor = true;
      method.visibility = vis;
      method.is_static = mods.is_static;
      method.line_span.start = start_line;
      parse_method_rest(cls, std::move(method));
      return;
    }

    std::string type = parse_type_name();
    if (peek().kind != TokenKind::Identifier)
      fail_here(line(), "expected member name after type");
    std::string member_name = advance().text;

    if (check_punct("(")) {
      MethodModel method;
      method.name = member_name;
      if (type != "void") method.return_type = TypeRef{type, {}};
      method.visibility = vis;
      method.is_static = mods.is_static;
      method.is_abstract =
          mods.is_abstract || (iface && !mods.is_default && !mods.is_static);
      method.line_span.start = start_line;
      parse_method_rest(cls, std::move(method));
      return;
    }

    // Field declaration, possibly with several declarators.
    for (;;) {
      AttributeModel attr;
      attr.name = member_name;
      attr.declared_type = TypeRef{type, {}};
      attr.visibility = iface && !mods.has_visibility ? Visibility::Public : vis;
      attr.is_static = mods.is_static || iface;
      add_attribute(cls, std::move(attr));
      while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
      if (accept_punct("=")) skip_initializer();
      if (accept_punct(",")) {
        member_name = expect_identifier();
        continue;
      }
      expect_punct(";");
      break;
    }
  }

  // Field initializer: skip to `,` or `;` at depth 0 (no metric content
  // is collected outside method bodies).
  void skip_initializer() {
    int depth = 0;
    while (!at_end()) {
      if (check_punct("(") || check_punct("[") || check_punct("{")) {
        ++depth;
      } else if (check_punct(")") || check_punct("]") || check_punct("}")) {
        if (depth == 0) return;
        --depth;
      } else if (depth == 0 && (check_punct(",") || check_punct(";"))) {
        return;
      }
      advance();
    }
  }

  void parse_method_rest(ClassModel& cls, MethodModel method) {
    MethodScope scope;
    scope.method = &method;
    expect_punct("(");
    if (!check_punct(")")) {
      do {
        skip_annotations();
        accept_keyword("final");
        std::string ptype = parse_type_name();
        std::string pname = expect_identifier();
        while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
        method.parameters.push_back(TypeRef{ptype, {}});
        scope.locals[pname] = ptype;
      } while (accept_punct(","));
    }
    expect_punct(")");
    if (accept_keyword("throws")) {
      do {
        parse_type_name();
      } while (accept_punct(","));
    }
    if (accept_punct(";")) {
      method.line_span.end = tokens_[pos_ - 1].line;
    } else {
      method.is_abstract = false; // a body follows
      expect_punct("{");
      Statement body;
      body.kind = StmtKind::Sequence;
      body.line = tokens_[pos_ - 1].line;
      while (!at_end() && !check_punct("}")) body.children.push_back(parse_statement(scope));
      method.line_span.end = line();
      expect_punct("}");
      method.body = std::move(body);
    }
    cls.methods.push_back(std::move(method));
    scope.method = nullptr; // scope data is paired with methods by order
    class_stack_.back().scopes.push_back(std::move(scope));
  }

  // ---- statements ----
  Statement parse_statement(MethodScope& scope) {
    Statement node;
    node.line = line();

    if (check_punct("{")) {
      advance();
      node.kind = StmtKind::Block;
      while (!at_end() && !check_punct("}")) node.children.push_back(parse_statement(scope));
      expect_punct("}");
      return node;
    }
    if (accept_punct(";")) {
      node.kind = StmtKind::Sequence; // empty statement, uncounted
      return node;
    }
    if (check_keyword("if")) return parse_if(scope);
    if (check_keyword("while")) {
      advance();
      node.kind = StmtKind::While;
      scan_parenthesized(scope, node);
      node.children.push_back(parse_statement(scope));
      return node;
    }
    if (check_keyword("do")) {
      advance();
      node.kind = StmtKind::DoWhile;
      node.children.push_back(parse_statement(scope));
      if (!accept_keyword("while")) fail_here(line(), "expected 'while' after do-body");
      scan_parenthesized(scope, node);
      expect_punct(";");
      return node;
    }
    if (check_keyword("for")) return parse_for(scope);
    if (check_keyword("switch")) return parse_switch(scope);
    if (check_keyword("try")) return parse_try(scope);
    if (check_keyword("return")) {
      advance();
      node.kind = StmtKind::Return;
      scan_expression(scope, node, {";"});
      expect_punct(";");
      return node;
    }
    if (check_keyword("throw")) {
      advance();
      node.kind = StmtKind::Throw;
      scan_expression(scope, node, {";"});
      expect_punct(";");
      return node;
    }
    if (check_keyword("break") || check_keyword("continue")) {
      bool is_break = peek().text == "break";
      advance();
      node.kind = is_break ? StmtKind::Break : StmtKind::Continue;
      if (peek().kind == TokenKind::Identifier) {
        node.labeled = true;
        node.target_label = advance().text;
      }
      expect_punct(";");
      return node;
    }
    if (check_keyword("synchronized") && check_punct("(", 1)) {
      advance();
      node.kind = StmtKind::Block;
      scan_parenthesized(scope, node);
      node.children.push_back(parse_statement(scope));
      return node;
    }
    if (check_keyword("assert")) {
      advance();
      node.kind = StmtKind::Expression;
      scan_expression(scope, node, {";"});
      expect_punct(";");
      return node;
    }
    if (check_keyword("class") || check_keyword("interface") || check_keyword("enum") ||
        ((check_keyword("abstract") || check_keyword("final") || check_keyword("static")) &&
         (check_keyword("class", 1) || check_keyword("interface", 1)))) {
      warning(line(), "local class declarations are not analyzed");
      while (!at_end() && !check_punct("{") && !check_punct(";")) advance();
      if (check_punct("{")) skip_balanced("{", "}");
      else accept_punct(";");
      node.kind = StmtKind::Sequence;
      return node;
    }
    // labeled statement
    if (peek().kind == TokenKind::Identifier && check_punct(":", 1)) {
      std::string label = advance().text;
      advance(); // ':'
      Statement labeled = parse_statement(scope);
      labeled.label = label;
      return labeled;
    }
    if (looks_like_declaration()) return parse_local_declaration(scope);

    node.kind = StmtKind::Expression;
    scan_expression(scope, node, {";"});
    expect_punct(";");
    return node;
  }

  Statement parse_if(MethodScope& scope) {
    Statement node;
    node.line = line();
    advance(); // 'if'
    node.kind = StmtKind::If;
    scan_parenthesized(scope, node);
    node.children.push_back(parse_statement(scope));
    if (accept_keyword("else")) {
      node.kind = StmtKind::IfElse;
      node.children.push_back(parse_statement(scope));
    }
    return node;
  }

  Statement parse_for(MethodScope& scope) {
    Statement node;
    node.line = line();
    advance(); // 'for'
    node.kind = StmtKind::For;
    expect_punct("(");
    if (check_punct(";")) {
      // no init clause
    } else if (looks_like_declaration()) {
      accept_keyword("final");
      std::string type = parse_type_name();
      std::string first = expect_identifier();
      scope.locals[first] = type;
      scope.method->local_decl_types.push_back(TypeRef{type, {}});
      if (accept_punct(":")) { // enhanced for
        scan_expression(scope, node, {}, /*stop_at_close_paren=*/true);
        expect_punct(")");
        node.children.push_back(parse_statement(scope));
        return node;
      }
      while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
      for (;;) {
        if (accept_punct("=")) scan_expression(scope, node, {",", ";"});
        if (accept_punct(",")) {
          std::string more = expect_identifier();
          scope.locals[more] = type;
          continue;
        }
        break;
      }
    } else {
      scan_expression(scope, node, {";"});
    }
    expect_punct(";");
    scan_expression(scope, node, {";"});
    expect_punct(";");
    scan_expression(scope, node, {}, /*stop_at_close_paren=*/true);
    expect_punct(")");
    node.children.push_back(parse_statement(scope));
    return node;
  }

  Statement parse_switch(MethodScope& scope) {
    Statement node;
    node.line = line();
    advance(); // 'switch'
    node.kind = StmtKind::Switch;
    scan_parenthesized(scope, node);
    expect_punct("{");

    Statement group;
    group.kind = StmtKind::Sequence;
    int labels = 0;
    bool group_open = false;
    bool group_has_stmts = false;

    auto close_group = [&]() {
      if (!group_open) return;
      node.group_labels.push_back(labels);
      node.children.push_back(std::move(group));
      group = Statement{};
      group.kind = StmtKind::Sequence;
      labels = 0;
      group_open = false;
      group_has_stmts = false;
    };

    while (!at_end() && !check_punct("}")) {
      if (check_keyword("case") || check_keyword("default")) {
        bool is_default = peek().text == "default";
        advance();
        if (group_has_stmts) close_group();
        group_open = true;
        ++labels;
        if (is_default) node.has_default = true;
        int depth = 0;
        while (!at_end()) { // skip the constant label expression
          if (check_punct("(")) ++depth;
          else if (check_punct(")")) --depth;
          else if (check_punct(":") && depth == 0) break;
          else if (check_punct("->") && depth == 0)
            fail_here(line(), "arrow switch rules are not supported");
          advance();
        }
        expect_punct(":");
        continue;
      }
      if (!group_open) fail_here(line(), "statement outside any case group");
      group.children.push_back(parse_statement(scope));
      group_has_stmts = true;
    }
    close_group();
    expect_punct("}");
    return node;
  }

  Statement parse_try(MethodScope& scope) {
    Statement node;
    node.line = line();
    advance(); // 'try'
    node.kind = StmtKind::Try;
    if (check_punct("(")) { // try-with-resources
      advance();
      while (!at_end() && !check_punct(")")) {
        accept_keyword("final");
        if (looks_like_declaration()) {
          std::string type = parse_type_name();
          std::string rname = expect_identifier();
          scope.locals[rname] = type;
          scope.method->local_decl_types.push_back(TypeRef{type, {}});
          if (accept_punct("=")) scan_expression(scope, node, {";"}, true);
        } else {
          scan_expression(scope, node, {";"}, true);
        }
        accept_punct(";");
      }
      expect_punct(")");
    }
    node.children.push_back(parse_block_as_sequence(scope));
    while (check_keyword("catch")) {
      advance();
      expect_punct("(");
      accept_keyword("final");
      std::string caught;
      do {
        caught = parse_type_name();
        scope.method->local_decl_types.push_back(TypeRef{caught, {}});
      } while (accept_punct("|"));
      std::string ename = expect_identifier();
      scope.locals[ename] = caught;
      expect_punct(")");
      node.children.push_back(parse_block_as_sequence(scope));
      ++node.catch_count;
    }
    if (accept_keyword("finally")) {
      node.has_finally = true;
      node.children.push_back(parse_block_as_sequence(scope));
    }
    return node;
  }

  Statement parse_block_as_sequence(MethodScope& scope) {
    Statement seq;
    seq.kind = StmtKind::Sequence;
    seq.line = line();
    expect_punct("{");
    while (!at_end() && !check_punct("}")) seq.children.push_back(parse_statement(scope));
    expect_punct("}");
    return seq;
  }

  Statement parse_local_declaration(MethodScope& scope) {
    Statement node;
    node.line = line();
    node.kind = StmtKind::LocalDecl;
    accept_keyword("final");
    std::string type = parse_type_name();
    scope.method->local_decl_types.push_back(TypeRef{type, {}});
    for (;;) {
      std::string name = expect_identifier();
      scope.locals[name] = type;
      while (check_punct("[") && check_punct("]", 1)) { advance(); advance(); }
      if (accept_punct("=")) scan_expression(scope, node, {",", ";"});
      if (accept_punct(",")) continue;
      break;
    }
    expect_punct(";");
    return node;
  }

  void scan_parenthesized(MethodScope& scope, Statement& node) {
    expect_punct("(");
    scan_expression(scope, node, {}, /*stop_at_close_paren=*/true);
    expect_punct(")");
  }

  // ---- expression scanning ----
  //
  // Walks tokens up to a terminator at depth 0 (or the close paren of an
  // already-open group), accumulating short-circuit/conditional operator
  // counts, call sites with best-effort receiver typing, used type names
  // and field-reference candidates. No expression AST is built; lambda
  // and anonymous-class bodies are walked in place so their invocations
  // land on the enclosing method.
  void scan_expression(MethodScope& scope, Statement& node,
                       std::set<std::string> terminators,
                       bool stop_at_close_paren = false) {
    struct Frame {
      char open;
      int call_index = -1; // owning call site, when the frame is an arg list
      int commas = 0;
      int tokens_inside = 0;
    };
    std::vector<Frame> frames;
    MethodModel& method = *scope.method;
    std::size_t first_call = method.invocations.size();
    int pending_call = -1;

    auto close_frame = [&]() {
      if (frames.empty()) return;
      Frame f = frames.back();
      frames.pop_back();
      if (f.call_index >= 0)
        method.invocations[static_cast<std::size_t>(f.call_index)].arity =
            f.tokens_inside > 0 ? f.commas + 1 : 0;
    };

    while (!at_end()) {
      const Token& t = peek();
      if (t.kind == TokenKind::Punct) {
        if (frames.empty()) {
          if (stop_at_close_paren && t.text == ")") break;
          if (terminators.count(t.text)) break;
          if (t.text == ")" || t.text == "}") break; // structural close beyond us
          if (t.text == ";") break;                  // never part of an expression
        }
        if (t.text == "&&" || t.text == "||") {
          node.short_circuit_ops++;
        } else if (t.text == "?") {
          node.conditional_ops++;
        } else if (t.text == "(" || t.text == "[" || t.text == "{") {
          if (!frames.empty()) frames.back().tokens_inside++;
          frames.push_back(Frame{t.text[0], t.text[0] == '(' ? pending_call : -1, 0, 0});
          pending_call = -1;
          advance();
          continue;
        } else if (t.text == ")" || t.text == "]" || t.text == "}") {
          close_frame();
          advance();
          continue;
        } else if (t.text == ",") {
          if (!frames.empty()) frames.back().commas++;
          advance();
          continue;
        }
        if (!frames.empty()) frames.back().tokens_inside++;
        advance();
        continue;
      }

      if (!frames.empty()) frames.back().tokens_inside++;

      if (t.kind == TokenKind::Keyword && t.text == "new") {
        advance();
        if (peek().kind != TokenKind::Identifier &&
            !(peek().kind == TokenKind::Keyword && is_primitive(peek().text)))
          continue; // malformed; keep walking
        std::string type = parse_type_name_in_expr();
        if (check_punct("(")) {
          CallSite call;
          call.target_name = simple_of(type);
          call.receiver_type = TypeRef{type, {}};
          method.invocations.push_back(std::move(call));
          pending_call = static_cast<int>(method.invocations.size()) - 1;
        } else {
          method.local_decl_types.push_back(TypeRef{type, {}}); // array creation
        }
        continue;
      }
      if (t.kind == TokenKind::Keyword && (t.text == "this" || t.text == "super") &&
          check_punct("(", 1)) {
        CallSite call;
        call.target_name = t.text;
        if (t.text == "this")
          call.receiver_type = TypeRef{class_stack_.back().qualified, {}};
        else if (!class_stack_.back().supertype_names.empty())
          call.receiver_type = TypeRef{class_stack_.back().supertype_names.front(), {}};
        method.invocations.push_back(std::move(call));
        pending_call = static_cast<int>(method.invocations.size()) - 1;
        advance();
        continue;
      }
      if (t.kind == TokenKind::Identifier) {
        if (check_punct("(", 1)) {
          CallSite call;
          call.target_name = t.text;
          infer_receiver(scope, call);
          method.invocations.push_back(std::move(call));
          pending_call = static_cast<int>(method.invocations.size()) - 1;
          advance();
          continue;
        }
        if (check_punct("::", 1)) { // method reference: skip both parts
          advance();
          advance();
          if (peek().kind == TokenKind::Identifier || check_keyword("new")) advance();
          continue;
        }
        note_attribute_candidate(scope, t.text);
        advance();
        continue;
      }
      advance();
    }
    for (std::size_t i = first_call; i < method.invocations.size(); ++i)
      node.calls.push_back(static_cast<int>(i));
  }

  // Type after `new`: always a type context, so `<` is unambiguous.
  std::string parse_type_name_in_expr() {
    if (peek().kind == TokenKind::Keyword && is_primitive(peek().text))
      return advance().text;
    std::string name = expect_identifier();
    skip_type_arguments();
    while (check_punct(".") && peek(1).kind == TokenKind::Identifier) {
      advance();
      name += "." + expect_identifier();
      skip_type_arguments();
    }
    return name;
  }

  // Receiver of the call whose name token is at pos_: inspect the
  // already consumed `a.b.` chain preceding it.
  void infer_receiver(MethodScope& scope, CallSite& call) {
    if (pos_ == 0 || !(tokens_[pos_ - 1].kind == TokenKind::Punct &&
                       tokens_[pos_ - 1].text == ".")) {
      call.receiver_type = TypeRef{class_stack_.back().qualified, {}}; // bare call
      return;
    }
    std::vector<std::string> chain;
    bool head_is_this = false;
    bool head_is_super = false;
    bool head_known = false;
    std::size_t j = pos_ - 1;
    while (j >= 1 && tokens_[j].kind == TokenKind::Punct && tokens_[j].text == ".") {
      const Token& before = tokens_[j - 1];
      if (before.kind == TokenKind::Identifier) {
        chain.insert(chain.begin(), before.text);
        if (j < 2) { head_known = true; break; }
        j -= 2;
        if (tokens_[j].kind == TokenKind::Punct && tokens_[j].text == ".") continue;
        head_known = true;
        break;
      }
      if (before.kind == TokenKind::Keyword && before.text == "this") {
        head_is_this = true;
        head_known = true;
      } else if (before.kind == TokenKind::Keyword && before.text == "super") {
        head_is_super = true;
        head_known = true;
      }
      break;
    }
    if (!head_known && chain.empty()) {
      call.receiver_type.reset(); // chained call or literal receiver
      return;
    }
    if (head_is_super) {
      if (!class_stack_.back().supertype_names.empty())
        call.receiver_type = TypeRef{class_stack_.back().supertype_names.front(), {}};
      else
        call.receiver_type.reset();
      return;
    }
    if (head_is_this) {
      if (chain.empty()) {
        call.receiver_type = TypeRef{class_stack_.back().qualified, {}};
      } else if (chain.size() == 1) {
        // this.field.m(): resolve via the field table once the class closes
        scope.field_receiver_patches.emplace_back(
            static_cast<int>(scope.method->invocations.size()), chain[0]);
        call.receiver_type.reset();
      } else {
        call.receiver_type.reset();
      }
      return;
    }
    if (chain.size() == 1) {
      auto it = scope.locals.find(chain[0]);
      if (it != scope.locals.end()) {
        call.receiver_type = TypeRef{it->second, {}};
        return;
      }
      scope.bare_receiver_patches.emplace_back(
          static_cast<int>(scope.method->invocations.size()), chain[0]);
      call.receiver_type.reset();
      return;
    }
    if (!chain.empty() && scope.locals.count(chain[0])) {
      call.receiver_type.reset(); // field chain through a local; unknown
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) joined.push_back('.');
      joined += chain[i];
    }
    call.receiver_type = TypeRef{joined, {}}; // qualified or static-style
  }

  void note_attribute_candidate(MethodScope& scope, const std::string& name) {
    bool after_dot = pos_ >= 1 && tokens_[pos_ - 1].kind == TokenKind::Punct &&
                     tokens_[pos_ - 1].text == ".";
    if (after_dot) {
      bool after_this = pos_ >= 2 && tokens_[pos_ - 2].kind == TokenKind::Keyword &&
                        tokens_[pos_ - 2].text == "this";
      if (after_this) scope.attr_candidates.insert(name);
      return;
    }
    if (scope.locals.count(name)) return;
    scope.attr_candidates.insert(name);
  }

  // ---- class finalization ----
  void add_attribute(ClassModel& cls, AttributeModel attr) {
    for (const AttributeModel& existing : cls.attributes) {
      if (existing.name == attr.name) {
        warning(line(), "duplicate attribute '" + attr.name + "' ignored");
        return;
      }
    }
    cls.attributes.push_back(std::move(attr));
  }

  void finalize_class(ClassModel& cls) {
    std::map<std::string, std::string> field_types;
    for (const AttributeModel& attr : cls.attributes)
      field_types[attr.name] = attr.declared_type.name;

    ClassCtx& ctx = class_stack_.back();
    for (std::size_t i = 0; i < cls.methods.size() && i < ctx.scopes.size(); ++i) {
      MethodModel& m = cls.methods[i];
      MethodScope& scope = ctx.scopes[i];
      for (const std::string& candidate : scope.attr_candidates)
        if (field_types.count(candidate)) m.attribute_refs.push_back(candidate);
      std::sort(m.attribute_refs.begin(), m.attribute_refs.end());
      for (auto& [call_idx, name] : scope.bare_receiver_patches) {
        if (call_idx < 0 || call_idx >= static_cast<int>(m.invocations.size())) continue;
        auto it = field_types.find(name);
        m.invocations[static_cast<std::size_t>(call_idx)].receiver_type =
            TypeRef{it != field_types.end() ? it->second : name, {}};
      }
      for (auto& [call_idx, name] : scope.field_receiver_patches) {
        if (call_idx < 0 || call_idx >= static_cast<int>(m.invocations.size())) continue;
        auto it = field_types.find(name);
        if (it != field_types.end())
          m.invocations[static_cast<std::size_t>(call_idx)].receiver_type =
              TypeRef{it->second, {}};
      }
    }
  }

  const SourceFile& file_;
  ParseResult& out_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string package_;
  std::vector<ClassCtx> class_stack_;
};

} // namespace

SourceFile make_source_file(std::string path, std::string text) {
  SourceFile file;
  file.path = std::move(path);
  file.text = std::move(text);
  file.line_count = static_cast<int>(classify_lines(file.text).sline);
  return file;
}

ParseResult parse_compilation_unit(const SourceFile& file) {
  ParseResult result;
  result.tally = classify_lines(file.text);
  UnitParser parser(file, result);
  parser.run();
  return result;
}

SourceTreeResult parse_source_tree(const std::string& root,
                                   const std::string& extension_glob) {
  namespace fs = std::filesystem;
  if (!fs::exists(root) || !fs::is_directory(root))
    fail(ErrorCode::IoFailure, "source root not found: " + root);

  // The glob supports `*` wildcards matched against the file name.
  auto matches = [&](const std::string& name) {
    const std::string& pat = extension_glob;
    std::size_t pi = 0, ni = 0, star = std::string::npos, back = 0;
    while (ni < name.size()) {
      if (pi < pat.size() && pat[pi] != '*' && pat[pi] == name[ni]) {
        ++pi;
        ++ni;
      } else if (pi < pat.size() && pat[pi] == '*') {
        star = pi++;
        back = ni;
      } else if (star != std::string::npos) {
        pi = star + 1;
        ni = ++back;
      } else {
        return false;
      }
    }
    while (pi < pat.size() && pat[pi] == '*') ++pi;
    return pi == pat.size();
  };

  std::vector<std::string> paths;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    if (matches(entry.path().filename().string())) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());

  SourceTreeResult result;
  std::vector<ClassModel> classes;
  LineTally total;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      result.diagnostics.push_back(
          {path, 0, "unreadable file", ParseDiagnostic::Severity::Error});
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    SourceFile file = make_source_file(path, buffer.str());
    ParseResult parsed = parse_compilation_unit(file);
    total += parsed.tally;
    for (auto& d : parsed.diagnostics) result.diagnostics.push_back(std::move(d));
    for (auto& c : parsed.classes) classes.push_back(std::move(c));
  }

  std::string project_name = fs::path(root).filename().string();
  if (project_name.empty()) project_name = root;
  result.project = resolve_project(std::move(classes), project_name, root, total);
  return result;
}

} // namespace oodq
