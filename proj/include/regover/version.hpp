#pragma once

#define REGOVER_VERSION "0.1.0"
