# ═══════════════════════════════════════════════════════════════════════════════
# Toolkit__Errors - exception hierarchy shared by every module
# Each class carries the CLI exit code used to report it
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.config import EXIT_CODE__USAGE, EXIT_CODE__PRECISION, EXIT_CODE__PRECONDITION, EXIT_CODE__NONCONVERGENCE


class Adic_Toolkit__Error(Exception):
    exit_code = EXIT_CODE__USAGE

    def json(self):
        return dict(error   = type(self).__name__,
                    message = str(self)         )

# usage / invalid input

class Invalid__Spec(Adic_Toolkit__Error):
    pass

class Parse__Error(Adic_Toolkit__Error):
    pass

class Context__Mismatch(Adic_Toolkit__Error):
    pass

class Chart__Mismatch(Adic_Toolkit__Error):
    pass

class Out_Of_Chart(Adic_Toolkit__Error):
    pass

class Missing__Parameter(Adic_Toolkit__Error):
    pass

# precision

class Precision__Exhausted(Adic_Toolkit__Error):
    exit_code = EXIT_CODE__PRECISION

# preconditions

class Padic__Division_By_Zero(Adic_Toolkit__Error, ZeroDivisionError):
    exit_code = EXIT_CODE__PRECONDITION

class Not_Near_Identity(Adic_Toolkit__Error):
    exit_code = EXIT_CODE__PRECONDITION

class Support__Violation(Adic_Toolkit__Error):                                    # a splitting step left the wrong side of the exponent lattice
    exit_code = EXIT_CODE__PRECONDITION

# nonconvergence

class Non_Convergence(Adic_Toolkit__Error):
    exit_code = EXIT_CODE__NONCONVERGENCE

    def __init__(self, message, decay_trace=None):
        super().__init__(message)
        self.decay_trace = list(decay_trace or [])

    def json(self):
        data = super().json()
        data['decay_trace'] = [str(value) for value in self.decay_trace]
        return data

class Step_Budget__Exhausted(Adic_Toolkit__Error):
    exit_code = EXIT_CODE__NONCONVERGENCE
