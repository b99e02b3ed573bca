#pragma once

#include "doubling/errors.hpp"
#include "doubling/rational.hpp"
#include "doubling/hypergeometric.hpp"
#include "doubling/families.hpp"
#include "doubling/doubles.hpp"
#include "doubling/transforms.hpp"
#include "doubling/specmat.hpp"
#include "doubling/eigvec.hpp"
#include "doubling/orthosys.hpp"
#include "doubling/oscalg.hpp"
#include "doubling/catalog.hpp"
#include "doubling/numeig.hpp"
#include "doubling/matrix_io.hpp"
#include "doubling/sampling.hpp"
#include "doubling/suites.hpp"
