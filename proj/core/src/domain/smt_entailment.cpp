#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstring>
#include <sstream>

#include "lazymdp/domain/entailment.hpp"

namespace lazymdp {

namespace {

void render_smt(const ExprPtr& e, const std::vector<VarDecl>& vars, std::ostream& out) {
  switch (e->op) {
    case ExprOp::IntLit:
      if (e->lit < 0) {
        out << "(- " << -(e->lit) << ")";
      } else {
        out << e->lit;
      }
      return;
    case ExprOp::BoolLit:
      out << (e->lit ? "true" : "false");
      return;
    case ExprOp::Var:
      out << vars.at(e->var).name;
      return;
    case ExprOp::Neg:
      out << "(- ";
      render_smt(e->lhs, vars, out);
      out << ")";
      return;
    case ExprOp::Not:
      out << "(not ";
      render_smt(e->lhs, vars, out);
      out << ")";
      return;
    default:
      break;
  }
  const char* head = nullptr;
  bool negate = false;
  switch (e->op) {
    case ExprOp::Add: head = "+"; break;
    case ExprOp::Sub: head = "-"; break;
    case ExprOp::Mul: head = "*"; break;
    case ExprOp::Eq: head = "="; break;
    case ExprOp::Ne: head = "="; negate = true; break;
    case ExprOp::Lt: head = "<"; break;
    case ExprOp::Le: head = "<="; break;
    case ExprOp::Gt: head = ">"; break;
    case ExprOp::Ge: head = ">="; break;
    case ExprOp::And: head = "and"; break;
    case ExprOp::Or: head = "or"; break;
    case ExprOp::Imp: head = "=>"; break;
    default: throw ContractError("to_smtlib: bad opcode");
  }
  if (negate) out << "(not ";
  out << "(" << head << " ";
  render_smt(e->lhs, vars, out);
  out << " ";
  render_smt(e->rhs, vars, out);
  out << ")";
  if (negate) out << ")";
}

}  // namespace

std::string to_smtlib(const ExprPtr& e, const std::vector<VarDecl>& vars) {
  std::ostringstream out;
  render_smt(e, vars, out);
  return out.str();
}

SmtProcessEntailment::SmtProcessEntailment(std::vector<VarDecl> vars,
                                           const std::string& command, int timeout_ms)
    : vars_(std::move(vars)), timeout_ms_(timeout_ms) {
  start(command);
  if (fprintf(to_child_, "(set-logic QF_LIA)\n") < 0 || fflush(to_child_) != 0) {
    throw DomainError("smt: failed to write preamble");
  }
}

SmtProcessEntailment::~SmtProcessEntailment() {
  if (to_child_) fclose(to_child_);  // EOF lets a healthy solver exit
  if (from_child_) fclose(from_child_);
  if (child_pid_ > 0) {
    int status = 0;
    if (waitpid(child_pid_, &status, WNOHANG) == 0) {
      // The child leads its own process group, so the shell wrapper and any
      // grandchildren die with it; a survivor would keep our inherited
      // descriptors open past our own exit.
      if (kill(-child_pid_, SIGKILL) != 0) kill(child_pid_, SIGKILL);
      waitpid(child_pid_, &status, 0);
    }
  }
}

void SmtProcessEntailment::start(const std::string& command) {
  // A solver that dies mid-conversation must surface as DomainError from
  // the write, not as a fatal SIGPIPE.
  signal(SIGPIPE, SIG_IGN);
  int in_pipe[2];   // parent -> child stdin
  int out_pipe[2];  // child stdout -> parent
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
    throw DomainError("smt: pipe() failed");
  }
  pid_t pid = fork();
  if (pid < 0) throw DomainError("smt: fork() failed");
  if (pid == 0) {
    setpgid(0, 0);
    dup2(in_pipe[0], 0);
    dup2(out_pipe[1], 1);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  child_pid_ = pid;
  to_child_ = fdopen(in_pipe[1], "w");
  from_child_ = fdopen(out_pipe[0], "r");
  if (!to_child_ || !from_child_) throw DomainError("smt: fdopen() failed");
}

std::string SmtProcessEntailment::render_query(const ExprPtr& a, const ExprPtr& b) const {
  std::ostringstream q;
  for (const auto& d : vars_) {
    if (d.type == Type::Bool) {
      q << "(declare-const " << d.name << " Bool)\n";
    } else {
      q << "(declare-const " << d.name << " Int)\n";
      q << "(assert (and (>= " << d.name << " ";
      if (d.lo < 0) {
        q << "(- " << -d.lo << ")";
      } else {
        q << d.lo;
      }
      q << ") (<= " << d.name << " ";
      if (d.hi < 0) {
        q << "(- " << -d.hi << ")";
      } else {
        q << d.hi;
      }
      q << ")))\n";
    }
  }
  q << "(assert " << to_smtlib(a, vars_) << ")\n";
  q << "(assert (not " << to_smtlib(b, vars_) << "))\n";
  q << "(check-sat)\n";
  return q.str();
}

std::string SmtProcessEntailment::read_reply_line() {
  // Poll-with-timeout on the underlying descriptor, then a buffered line
  // read; the child always answers check-sat with a single line.
  int fd = fileno(from_child_);
  struct pollfd p {};
  p.fd = fd;
  p.events = POLLIN;
  int rc = poll(&p, 1, timeout_ms_);
  if (rc == 0) throw DomainError("smt: solver reply timed out");
  if (rc < 0) throw DomainError("smt: poll() failed");
  char buf[256];
  if (!fgets(buf, sizeof buf, from_child_)) {
    throw DomainError("smt: solver closed its output");
  }
  std::string line(buf);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  return line;
}

bool SmtProcessEntailment::entails(const ExprPtr& a, const ExprPtr& b) {
  std::lock_guard<std::mutex> lock(mu_);
  std::string q = render_query(a, b);
  if (fprintf(to_child_, "(push 1)\n%s(pop 1)\n", q.c_str()) < 0 ||
      fflush(to_child_) != 0) {
    throw DomainError("smt: failed to write query");
  }
  std::string reply = read_reply_line();
  if (reply == "unsat") return true;
  if (reply == "sat") return false;
  throw DomainError("smt: unexpected solver reply: '" + reply + "'");
}

}  // namespace lazymdp
