# ═══════════════════════════════════════════════════════════════════════════════
# Run__Config - the global flags every command honours
#
# Each value resolves as: explicit flag > ADIC_TOOLKIT__* environment variable > default
# ═══════════════════════════════════════════════════════════════════════════════

from sympy                                              import isprime
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from osbot_utils.utils.Env                              import get_env
from adic_spaces_toolkit.config                         import (DEFAULT__PRIME, DEFAULT__PRECISION, DEFAULT__WINDOW, DEFAULT__THRESHOLD,
                                                                DEFAULT__OUTPUT_FORMAT, ENV_VAR__PRIME, ENV_VAR__PRECISION, ENV_VAR__WINDOW,
                                                                ENV_VAR__THRESHOLD, ENV_VAR__FORMAT, RUN_CONFIG__MIN_PRECISION,
                                                                RUN_CONFIG__MIN_WINDOW, RUN_CONFIG__OUTPUT_FORMATS)
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec


class Run__Config(Type_Safe):
    prime         : int = DEFAULT__PRIME
    precision     : int = DEFAULT__PRECISION
    window        : int = DEFAULT__WINDOW
    threshold     : int = DEFAULT__THRESHOLD                                     # < 0 means precision - guard digits
    output_format : str = DEFAULT__OUTPUT_FORMAT

    @classmethod
    def from_args(cls, args) -> 'Run__Config':
        config = cls()
        config.prime         = config.resolve_int(getattr(args, 'prime'    , None), ENV_VAR__PRIME    , DEFAULT__PRIME    )
        config.precision     = config.resolve_int(getattr(args, 'precision', None), ENV_VAR__PRECISION, DEFAULT__PRECISION)
        config.window        = config.resolve_int(getattr(args, 'window'   , None), ENV_VAR__WINDOW   , DEFAULT__WINDOW   )
        config.threshold     = config.resolve_int(getattr(args, 'threshold', None), ENV_VAR__THRESHOLD, DEFAULT__THRESHOLD)
        config.output_format = config.resolve_format(getattr(args, 'format', None))
        return config.validate()

    # ═══════════════════════════════════════════════════════════════════════════════
    # Configuration Resolution
    # ═══════════════════════════════════════════════════════════════════════════════

    def resolve_int(self, flag_value, env_var: str, default: int) -> int:
        if flag_value is not None:
            return int(flag_value)
        env_value = get_env(env_var, None)
        if env_value:
            try:
                return int(env_value)
            except ValueError as error:
                raise Invalid__Spec(f"{env_var} must be an integer, got {env_value!r}") from error
        return default

    def resolve_format(self, flag_value) -> str:
        if flag_value:
            return flag_value
        env_value = get_env(ENV_VAR__FORMAT, None)
        if env_value:
            return env_value.strip().lower()
        return DEFAULT__OUTPUT_FORMAT

    def validate(self) -> 'Run__Config':
        if not isprime(self.prime):
            raise Invalid__Spec(f"p must be prime, got {self.prime}")
        if self.precision < RUN_CONFIG__MIN_PRECISION:
            raise Invalid__Spec(f"precision N must be >= {RUN_CONFIG__MIN_PRECISION}, got {self.precision}")
        if self.window < RUN_CONFIG__MIN_WINDOW:
            raise Invalid__Spec(f"window D must be >= {RUN_CONFIG__MIN_WINDOW}, got {self.window}")
        if self.threshold >= self.precision:
            raise Invalid__Spec(f"zero threshold must be < N = {self.precision}, got {self.threshold}")
        if self.output_format not in RUN_CONFIG__OUTPUT_FORMATS:
            raise Invalid__Spec(f"format must be one of {', '.join(RUN_CONFIG__OUTPUT_FORMATS)}, got {self.output_format!r}")
        return self

    def context(self) -> Padic__Context:
        return Padic__Context(prime=self.prime, precision=self.precision)

    def json(self):
        return dict(p=self.prime, N=self.precision, D=self.window, threshold=self.threshold, format=self.output_format)
