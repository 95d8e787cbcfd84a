"""Exception hierarchy shared by every module."""


class SkeinHeckeError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"


class TagMismatch(SkeinHeckeError, TypeError):
    code = "tag_mismatch"


class AlphabetMismatch(SkeinHeckeError, ValueError):
    code = "alphabet_mismatch"


class WordSyntaxError(SkeinHeckeError, ValueError):
    code = "syntax_error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class IllegalGenerator(SkeinHeckeError, ValueError):
    code = "illegal_generator"


class OrderViolation(SkeinHeckeError, ValueError):
    code = "order_violation"


class VariantSurfaceMismatch(SkeinHeckeError, ValueError):
    code = "variant_surface_mismatch"


class CtxMismatch(SkeinHeckeError, ValueError):
    code = "ctx_mismatch"


class FixtureError(SkeinHeckeError, ValueError):
    code = "fixture_error"


class StepCapExceeded(SkeinHeckeError, RuntimeError):
    """Reduction ran past its step budget; ``word`` is the term being rewritten."""

    code = "step_cap_exceeded"

    def __init__(self, step_cap, word=None, context=None):
        msg = f"exceeded {step_cap} rewrite steps"
        if word is not None:
            msg += f" while rewriting {word}"
        if context:
            msg += f" [{context}]"
        super().__init__(msg)
        self.step_cap = step_cap
        self.word = word
        self.context = context
