#pragma once

#include "coradical/io.hpp"
#include "coradical/report.hpp"
