#include "dram/lambdas.h"
#include "dram/standards.h"

namespace memsim {

namespace {

const std::map<std::string, OrgPreset> org_presets = {
    //                 density  DQ    Ch Ra Bg Ba  Row      Col
    {"DDR5_8Gb_x8",  {"8Gb",    8,   {1, 2, 8, 4, 1 << 15, 1 << 10}}},
    {"DDR5_16Gb_x8", {"16Gb",   8,   {1, 2, 8, 4, 1 << 16, 1 << 10}}},
    {"DDR5_32Gb_x8", {"32Gb",   8,   {1, 2, 8, 4, 1 << 17, 1 << 10}}},
};

const std::map<std::string, std::vector<int>> timing_presets = {
    //              nBL nCL nCWL nRCD nRP nRAS  nRC nWR nRTP nCCD_S nCCD_L nRRD_S nRRD_L nWTR_S nWTR_L nFAW nRFC nREFI nRFM
    {"DDR5_4800", {  8, 40,  38,  39, 39,  77, 116, 72,  18,     8,    16,     8,    12,    12,    24,  32, 984,  9360, 840}},
    {"DDR5_6400", {  8, 46,  44,  46, 46, 103, 149, 97,  25,     8,    16,     8,    16,    16,    32,  32, 1312, 12480, 1120}},
};

} // namespace

DeviceSpec build_ddr5_spec(ParamReader& reader) {
  DeviceSpec spec;
  spec.standard = "DDR5";

  spec.levels = NameTable("level", {"channel", "rank", "bankgroup", "bank", "row", "column"});

  spec.commands =
      NameTable("command", {"ACT", "PRE", "PREab", "RD", "WR", "RDA", "WRA", "REFab", "RFMab"});
  spec.scopes = {
      spec.levels("row"),    // ACT
      spec.levels("bank"),   // PRE
      spec.levels("rank"),   // PREab
      spec.levels("column"), // RD
      spec.levels("column"), // WR
      spec.levels("column"), // RDA
      spec.levels("column"), // WRA
      spec.levels("rank"),   // REFab
      spec.levels("rank"),   // RFMab
  };
  spec.meta = {
      //        open   close  closeall refresh read  write
      /*ACT*/   {true, false, false,   false,  false, false},
      /*PRE*/   {false, true, false,   false,  false, false},
      /*PREab*/ {false, false, true,   false,  false, false},
      /*RD*/    {false, false, false,  false,  true,  false},
      /*WR*/    {false, false, false,  false,  false, true},
      /*RDA*/   {false, true, false,   false,  true,  false},
      /*WRA*/   {false, true, false,   false,  false, true},
      /*REFab*/ {false, false, false,  true,   false, false},
      /*RFMab*/ {false, false, false,  true,   false, false},
  };

  spec.states = NameTable("state", {"PoweredUp", "Closed", "Opened", "Refreshing"});

  spec.timings = NameTable(
      "timing", {"nBL", "nCL", "nCWL", "nRCD", "nRP", "nRAS", "nRC", "nWR", "nRTP", "nCCD_S",
                 "nCCD_L", "nRRD_S", "nRRD_L", "nWTR_S", "nWTR_L", "nFAW", "nRFC", "nREFI",
                 "nRFM"});

  spec.requests = NameTable("request", {"read", "write", "all-bank-refresh", "rfm", "open-row",
                                        "close-row"});
  spec.request_command = {
      spec.commands("RD"),    // read
      spec.commands("WR"),    // write
      spec.commands("REFab"), // all-bank-refresh
      spec.commands("RFMab"), // rfm
      spec.commands("ACT"),   // open-row
      spec.commands("PRE"),   // close-row
  };

  detail::read_org(reader, org_presets, "DDR5_16Gb_x8", spec);
  detail::read_timing(reader, timing_presets, "DDR5_4800", spec);

  auto V = [&](std::string_view s) { return spec.timing(s); };
  spec.constraints = {
      /*** Channel: data bus occupancy ***/
      {.level = "channel", .preceding = {"RD", "RDA"}, .following = {"RD", "RDA"},
       .latency = V("nBL")},
      {.level = "channel", .preceding = {"WR", "WRA"}, .following = {"WR", "WRA"},
       .latency = V("nBL")},

      /*** Rank ***/
      {.level = "rank", .preceding = {"RD", "RDA"}, .following = {"WR", "WRA"},
       .latency = V("nCL") + V("nBL") + 2 - V("nCWL")},
      {.level = "rank", .preceding = {"RD", "RDA", "WR", "WRA"},
       .following = {"RD", "RDA", "WR", "WRA"}, .latency = V("nBL") + 2, .sibling = true},
      {.level = "rank", .preceding = {"RD", "RDA"}, .following = {"PREab"},
       .latency = V("nRTP")},
      {.level = "rank", .preceding = {"WR", "WRA"}, .following = {"PREab"},
       .latency = V("nCWL") + V("nBL") + V("nWR")},
      {.level = "rank", .preceding = {"ACT"}, .following = {"ACT"}, .latency = V("nFAW"),
       .window = 4},
      {.level = "rank", .preceding = {"ACT"}, .following = {"PREab"}, .latency = V("nRAS")},
      {.level = "rank", .preceding = {"PREab"}, .following = {"ACT"}, .latency = V("nRP")},
      // RAS <-> REF/RFM
      {.level = "rank", .preceding = {"ACT"}, .following = {"REFab", "RFMab"},
       .latency = V("nRC")},
      {.level = "rank", .preceding = {"PRE", "PREab"}, .following = {"REFab", "RFMab"},
       .latency = V("nRP")},
      {.level = "rank", .preceding = {"RDA"}, .following = {"REFab", "RFMab"},
       .latency = V("nRTP") + V("nRP")},
      {.level = "rank", .preceding = {"WRA"}, .following = {"REFab", "RFMab"},
       .latency = V("nCWL") + V("nBL") + V("nWR") + V("nRP")},
      {.level = "rank", .preceding = {"REFab"},
       .following = {"ACT", "PREab", "REFab", "RFMab"}, .latency = V("nRFC")},
      {.level = "rank", .preceding = {"RFMab"},
       .following = {"ACT", "PREab", "REFab", "RFMab"}, .latency = V("nRFM")},

      /*** Bank group ***/
      {.level = "bankgroup", .preceding = {"RD", "RDA"}, .following = {"RD", "RDA"},
       .latency = V("nCCD_L")},
      {.level = "bankgroup", .preceding = {"RD", "RDA"}, .following = {"RD", "RDA"},
       .latency = V("nCCD_S"), .sibling = true},
      {.level = "bankgroup", .preceding = {"WR", "WRA"}, .following = {"WR", "WRA"},
       .latency = V("nCCD_L")},
      {.level = "bankgroup", .preceding = {"WR", "WRA"}, .following = {"WR", "WRA"},
       .latency = V("nCCD_S"), .sibling = true},
      {.level = "bankgroup", .preceding = {"WR", "WRA"}, .following = {"RD", "RDA"},
       .latency = V("nCWL") + V("nBL") + V("nWTR_L")},
      {.level = "bankgroup", .preceding = {"WR", "WRA"}, .following = {"RD", "RDA"},
       .latency = V("nCWL") + V("nBL") + V("nWTR_S"), .sibling = true},
      {.level = "bankgroup", .preceding = {"ACT"}, .following = {"ACT"},
       .latency = V("nRRD_L")},
      {.level = "bankgroup", .preceding = {"ACT"}, .following = {"ACT"},
       .latency = V("nRRD_S"), .sibling = true},

      /*** Bank ***/
      {.level = "bank", .preceding = {"ACT"}, .following = {"RD", "WR", "RDA", "WRA"},
       .latency = V("nRCD")},
      {.level = "bank", .preceding = {"RD"}, .following = {"PRE"}, .latency = V("nRTP")},
      {.level = "bank", .preceding = {"WR"}, .following = {"PRE"},
       .latency = V("nCWL") + V("nBL") + V("nWR")},
      {.level = "bank", .preceding = {"RDA"}, .following = {"ACT"},
       .latency = V("nRTP") + V("nRP")},
      {.level = "bank", .preceding = {"WRA"}, .following = {"ACT"},
       .latency = V("nCWL") + V("nBL") + V("nWR") + V("nRP")},
      {.level = "bank", .preceding = {"ACT"}, .following = {"ACT"}, .latency = V("nRC")},
      {.level = "bank", .preceding = {"ACT"}, .following = {"PRE"}, .latency = V("nRAS")},
      {.level = "bank", .preceding = {"PRE"}, .following = {"ACT"}, .latency = V("nRP")},
  };

  spec.prereqs.resize(spec.levels.size(), std::vector<PrereqFn>(spec.commands.size(), nullptr));
  spec.prereqs[spec.levels("rank")][spec.commands("REFab")] = lib::require_all_banks_closed;
  spec.prereqs[spec.levels("rank")][spec.commands("RFMab")] = lib::require_all_banks_closed;
  spec.prereqs[spec.levels("bank")][spec.commands("ACT")] = lib::require_bank_closed;
  spec.prereqs[spec.levels("bank")][spec.commands("PRE")] = lib::require_same_row_or_precharge;
  spec.prereqs[spec.levels("bank")][spec.commands("RD")] = lib::require_row_open;
  spec.prereqs[spec.levels("bank")][spec.commands("WR")] = lib::require_row_open;
  spec.prereqs[spec.levels("bank")][spec.commands("RDA")] = lib::require_row_open;
  spec.prereqs[spec.levels("bank")][spec.commands("WRA")] = lib::require_row_open;

  spec.actions.resize(spec.levels.size(), std::vector<ActionFn>(spec.commands.size(), nullptr));
  spec.actions[spec.levels("rank")][spec.commands("PREab")] = lib::close_all_rows;
  spec.actions[spec.levels("bank")][spec.commands("ACT")] = lib::open_row;
  spec.actions[spec.levels("bank")][spec.commands("PRE")] = lib::close_row;
  spec.actions[spec.levels("bank")][spec.commands("RD")] = lib::consume_column;
  spec.actions[spec.levels("bank")][spec.commands("WR")] = lib::consume_column;
  spec.actions[spec.levels("bank")][spec.commands("RDA")] = lib::close_row;
  spec.actions[spec.levels("bank")][spec.commands("WRA")] = lib::close_row;

  spec.row_hits.resize(spec.levels.size(), std::vector<RowQueryFn>(spec.commands.size(), nullptr));
  spec.row_opens.resize(spec.levels.size(),
                        std::vector<RowQueryFn>(spec.commands.size(), nullptr));
  for (const char* cmd : {"RD", "WR", "RDA", "WRA"}) {
    spec.row_hits[spec.levels("bank")][spec.commands(cmd)] = lib::row_hit_at_target;
    spec.row_opens[spec.levels("bank")][spec.commands(cmd)] = lib::row_is_open;
  }

  spec.finalize();
  return spec;
}

} // namespace memsim
