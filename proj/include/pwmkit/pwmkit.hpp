#pragma once

#include "pwmkit/angles.hpp"
#include "pwmkit/cli.hpp"
#include "pwmkit/command.hpp"
#include "pwmkit/duty.hpp"
#include "pwmkit/errors.hpp"
#include "pwmkit/io.hpp"
#include "pwmkit/simulate.hpp"
#include "pwmkit/spectrum.hpp"
#include "pwmkit/svg.hpp"
#include "pwmkit/timing.hpp"
