"""Exception hierarchy shared by every qham module."""


class QhamError(ValueError):
    """Base class for all qham errors."""

    code = "error"

    def to_dict(self):
        return {"type": self.code, "message": str(self)}


class ValidationError(QhamError):
    """Malformed input: wrong lengths, bad characters, bad indices."""

    code = "validation_error"

    def __init__(self, message, index=None, field=None):
        super().__init__(message)
        self.index = index
        self.field = field

    def to_dict(self):
        out = super().to_dict()
        if self.index is not None:
            out["index"] = self.index
        if self.field is not None:
            out["field"] = self.field
        return out


class CapacityError(QhamError):
    """Requested register exceeds the simulator's qubit ceiling or a device budget."""

    code = "capacity_error"


class PostSelectionError(QhamError):
    """Collapse onto an outcome that has zero probability."""

    code = "post_selection_impossible"
