// surprise :: umbrella header

#ifndef SURPRISE_SURPRISE_HPP_
#define SURPRISE_SURPRISE_HPP_

#include "surprise/error.hpp"
#include "surprise/run.hpp"
#include "surprise/formula.hpp"
#include "surprise/syntax.hpp"
#include "surprise/prop.hpp"
#include "surprise/analysis.hpp"
#include "surprise/kripke.hpp"
#include "surprise/modal.hpp"
#include "surprise/random.hpp"
#include "surprise/model_io.hpp"
#include "surprise/facts.hpp"
#include "surprise/report.hpp"
#include "surprise/verify.hpp"

#endif // SURPRISE_SURPRISE_HPP_
