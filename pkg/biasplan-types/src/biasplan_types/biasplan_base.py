from pydantic import BaseModel, ConfigDict


class BiasplanModel(BaseModel):
    """Base class for all biasplan models.

    Models are immutable once built: planners and agents share them freely,
    including across worker processes during verification sweeps.
    """

    model_config = ConfigDict(
        frozen=True, extra="forbid", arbitrary_types_allowed=True
    )
