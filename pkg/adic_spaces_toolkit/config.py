from adic_spaces_toolkit import package_name

TOOLKIT_NAME                                   = package_name
TOOLKIT__TITLE                                 = "Adic-Spaces Toolkit"
TOOLKIT__DESCRIPTION                           = "Exact p-adic, Cech, Cartan and Tate-curve computations on adic discs and annuli"

# ═══════════════════════════════════════════════════════════════════════════════
# Arithmetic defaults
# ═══════════════════════════════════════════════════════════════════════════════

DEFAULT__PRIME                  = 5
DEFAULT__PRECISION              = 8                                              # relative p-adic digits
DEFAULT__WINDOW                 = 8                                              # exponent window [-D, D]
DEFAULT__THRESHOLD              = -1                                             # -1 means precision - THRESHOLD__GUARD_DIGITS
DEFAULT__OUTPUT_FORMAT          = 'json'
THRESHOLD__GUARD_DIGITS         = 2

RUN_CONFIG__MIN_PRECISION       = 4
RUN_CONFIG__MIN_WINDOW          = 1
RUN_CONFIG__OUTPUT_FORMATS      = ('json', 'dot', 'text')

CARTAN__WINDOW_FACTOR           = 2                                              # internal window = factor * input window
CARTAN__EXTRA_ITERATIONS        = 4
CARTAN__NEUMANN_EXTRA_TERMS     = 2

J_SERIES__STEP_BUDGET           = 5_000_000

# ═══════════════════════════════════════════════════════════════════════════════
# Environment Variable Names
# ═══════════════════════════════════════════════════════════════════════════════

ENV_VAR__PRIME                  = 'ADIC_TOOLKIT__PRIME'
ENV_VAR__PRECISION              = 'ADIC_TOOLKIT__PRECISION'
ENV_VAR__WINDOW                 = 'ADIC_TOOLKIT__WINDOW'
ENV_VAR__THRESHOLD              = 'ADIC_TOOLKIT__THRESHOLD'
ENV_VAR__FORMAT                 = 'ADIC_TOOLKIT__FORMAT'

# ═══════════════════════════════════════════════════════════════════════════════
# CLI exit codes
# ═══════════════════════════════════════════════════════════════════════════════

EXIT_CODE__OK                   = 0
EXIT_CODE__USAGE                = 2
EXIT_CODE__PRECISION            = 3
EXIT_CODE__PRECONDITION         = 4
EXIT_CODE__NONCONVERGENCE       = 5
