#pragma once

// Everything except the CLI and JSON layers, which need third-party headers.

#include "cyp/checker.hpp"
#include "cyp/eval.hpp"
#include "cyp/induction.hpp"
#include "cyp/kernel.hpp"
#include "cyp/oracle.hpp"
#include "cyp/parser.hpp"
#include "cyp/patterns.hpp"
#include "cyp/pretty.hpp"
#include "cyp/report.hpp"
#include "cyp/types.hpp"
