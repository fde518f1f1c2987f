#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pacsim/common.hpp"

namespace pacsim {

// PREF is a controller-issued preventive refresh (ACT+PRE composite).
// DREF is a victim refresh the device performs inside an RFM.
enum class Cmd : std::uint8_t { ACT, PRE, RD, WR, REF, RFM, PREF, DREF };

enum class LatencyClass : std::uint8_t { none, full, partial };

std::string_view to_string(Cmd c);
std::string_view to_string(LatencyClass c);
Cmd parse_cmd(std::string_view s);
LatencyClass parse_latency_class(std::string_view s);

struct Command {
  Tick tick = 0;
  Cmd cmd = Cmd::ACT;
  int rank = 0;
  int bank = -1;  // flat bank index within the rank; -1 for rank-wide commands
  RowIndex row = 0;
  LatencyClass cls = LatencyClass::none;

  friend bool operator==(const Command&, const Command&) = default;
};

class CommandSink {
 public:
  virtual ~CommandSink() = default;
  virtual void on_command(const Command& c) = 0;
  virtual void finish(Tick /*end*/) {}
};

/// Fans one stream out to several sinks.
class TeeSink : public CommandSink {
 public:
  void add(CommandSink* s) { sinks_.push_back(s); }
  void on_command(const Command& c) override {
    for (auto* s : sinks_) s->on_command(c);
  }
  void finish(Tick end) override {
    for (auto* s : sinks_) s->finish(end);
  }

 private:
  std::vector<CommandSink*> sinks_;
};

class VectorSink : public CommandSink {
 public:
  void on_command(const Command& c) override { log.push_back(c); }
  std::vector<Command> log;
};

/// Writes the `tick,cmd,rank,bank,row,latency_class` CSV.
class CsvLogWriter : public CommandSink {
 public:
  explicit CsvLogWriter(std::ostream& out);
  void on_command(const Command& c) override;

 private:
  std::ostream& out_;
};

void write_command_log(std::ostream& out, const std::vector<Command>& log);
std::vector<Command> read_command_log(std::istream& in);

}  // namespace pacsim
