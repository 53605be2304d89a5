"""Structure and state-space definitions for the bundled benchmark networks.

Structures follow the published networks exactly (validated in
scripts/check_structures.py against the reference partially-directed-graph
arithmetic).  Parameters are canonical where public (asia, cancer,
earthquake, survey) and synthetic elsewhere; synthetic networks carry a
``synthetic_parameters`` property in the emitted BIF.
"""

# Each entry: name -> (states: {var: [state, ...]}, parents: {var: [parent, ...]},
#                      cpts: {var: {parent_combo_or_(): [probs]}} or None for synthetic)

ASIA_STATES = {
    "asia": ["yes", "no"],
    "tub": ["yes", "no"],
    "smoke": ["yes", "no"],
    "lung": ["yes", "no"],
    "bronc": ["yes", "no"],
    "either": ["yes", "no"],
    "xray": ["yes", "no"],
    "dysp": ["yes", "no"],
}
ASIA_PARENTS = {
    "asia": [],
    "tub": ["asia"],
    "smoke": [],
    "lung": ["smoke"],
    "bronc": ["smoke"],
    "either": ["lung", "tub"],
    "xray": ["either"],
    "dysp": ["bronc", "either"],
}
ASIA_CPTS = {
    "asia": {(): [0.01, 0.99]},
    "tub": {("yes",): [0.05, 0.95], ("no",): [0.01, 0.99]},
    "smoke": {(): [0.5, 0.5]},
    "lung": {("yes",): [0.1, 0.9], ("no",): [0.01, 0.99]},
    "bronc": {("yes",): [0.6, 0.4], ("no",): [0.3, 0.7]},
    "either": {
        ("yes", "yes"): [1.0, 0.0],
        ("yes", "no"): [1.0, 0.0],
        ("no", "yes"): [1.0, 0.0],
        ("no", "no"): [0.0, 1.0],
    },
    "xray": {("yes",): [0.98, 0.02], ("no",): [0.05, 0.95]},
    "dysp": {
        ("yes", "yes"): [0.9, 0.1],
        ("yes", "no"): [0.8, 0.2],
        ("no", "yes"): [0.7, 0.3],
        ("no", "no"): [0.1, 0.9],
    },
}

CANCER_STATES = {
    "Pollution": ["low", "high"],
    "Smoker": ["True", "False"],
    "Cancer": ["True", "False"],
    "Xray": ["positive", "negative"],
    "Dyspnoea": ["True", "False"],
}
CANCER_PARENTS = {
    "Pollution": [],
    "Smoker": [],
    "Cancer": ["Pollution", "Smoker"],
    "Xray": ["Cancer"],
    "Dyspnoea": ["Cancer"],
}
CANCER_CPTS = {
    "Pollution": {(): [0.9, 0.1]},
    "Smoker": {(): [0.3, 0.7]},
    "Cancer": {
        ("low", "True"): [0.03, 0.97],
        ("low", "False"): [0.001, 0.999],
        ("high", "True"): [0.05, 0.95],
        ("high", "False"): [0.02, 0.98],
    },
    "Xray": {("True",): [0.9, 0.1], ("False",): [0.2, 0.8]},
    "Dyspnoea": {("True",): [0.65, 0.35], ("False",): [0.3, 0.7]},
}

EARTHQUAKE_STATES = {
    "Burglary": ["True", "False"],
    "Earthquake": ["True", "False"],
    "Alarm": ["True", "False"],
    "JohnCalls": ["True", "False"],
    "MaryCalls": ["True", "False"],
}
EARTHQUAKE_PARENTS = {
    "Burglary": [],
    "Earthquake": [],
    "Alarm": ["Burglary", "Earthquake"],
    "JohnCalls": ["Alarm"],
    "MaryCalls": ["Alarm"],
}
EARTHQUAKE_CPTS = {
    "Burglary": {(): [0.01, 0.99]},
    "Earthquake": {(): [0.02, 0.98]},
    "Alarm": {
        ("True", "True"): [0.95, 0.05],
        ("True", "False"): [0.94, 0.06],
        ("False", "True"): [0.29, 0.71],
        ("False", "False"): [0.001, 0.999],
    },
    "JohnCalls": {("True",): [0.9, 0.1], ("False",): [0.05, 0.95]},
    "MaryCalls": {("True",): [0.7, 0.3], ("False",): [0.01, 0.99]},
}

SURVEY_STATES = {
    "A": ["young", "adult", "old"],
    "S": ["M", "F"],
    "E": ["high", "uni"],
    "O": ["emp", "self"],
    "R": ["small", "big"],
    "T": ["car", "train", "other"],
}
SURVEY_PARENTS = {
    "A": [],
    "S": [],
    "E": ["A", "S"],
    "O": ["E"],
    "R": ["E"],
    "T": ["O", "R"],
}
SURVEY_CPTS = {
    "A": {(): [0.3, 0.5, 0.2]},
    "S": {(): [0.6, 0.4]},
    "E": {
        ("young", "M"): [0.75, 0.25],
        ("adult", "M"): [0.72, 0.28],
        ("old", "M"): [0.88, 0.12],
        ("young", "F"): [0.64, 0.36],
        ("adult", "F"): [0.70, 0.30],
        ("old", "F"): [0.90, 0.10],
    },
    "O": {("high",): [0.96, 0.04], ("uni",): [0.92, 0.08]},
    "R": {("high",): [0.25, 0.75], ("uni",): [0.20, 0.80]},
    "T": {
        ("emp", "small"): [0.48, 0.42, 0.10],
        ("self", "small"): [0.56, 0.36, 0.08],
        ("emp", "big"): [0.58, 0.24, 0.18],
        ("self", "big"): [0.70, 0.21, 0.09],
    },
}

LUCAS_STATES = {
    v: ["T", "F"]
    for v in [
        "Smoking",
        "Yellow_Fingers",
        "Anxiety",
        "Peer_Pressure",
        "Genetics",
        "Attention_Disorder",
        "Born_an_Even_Day",
        "Car_Accident",
        "Fatigue",
        "Allergy",
        "Coughing",
        "Lung_cancer",
    ]
}
LUCAS_PARENTS = {
    "Anxiety": [],
    "Peer_Pressure": [],
    "Smoking": ["Anxiety", "Peer_Pressure"],
    "Yellow_Fingers": ["Smoking"],
    "Genetics": [],
    "Lung_cancer": ["Smoking", "Genetics"],
    "Attention_Disorder": ["Genetics"],
    "Allergy": [],
    "Coughing": ["Allergy", "Lung_cancer"],
    "Fatigue": ["Coughing", "Lung_cancer"],
    "Car_Accident": ["Attention_Disorder", "Fatigue"],
    "Born_an_Even_Day": [],
}
LUCAS_CPTS = {
    "Anxiety": {(): [0.64277, 0.35723]},
    "Peer_Pressure": {(): [0.32997, 0.67003]},
    "Genetics": {(): [0.15953, 0.84047]},
    "Allergy": {(): [0.32841, 0.67159]},
    "Born_an_Even_Day": {(): [0.5, 0.5]},
    "Smoking": {
        ("T", "T"): [0.91, 0.09],
        ("T", "F"): [0.74, 0.26],
        ("F", "T"): [0.68, 0.32],
        ("F", "F"): [0.22, 0.78],
    },
    "Yellow_Fingers": {("T",): [0.95, 0.05], ("F",): [0.23, 0.77]},
    "Lung_cancer": {
        ("T", "T"): [0.93, 0.07],
        ("T", "F"): [0.83, 0.17],
        ("F", "T"): [0.71, 0.29],
        ("F", "F"): [0.23, 0.77],
    },
    "Attention_Disorder": {("T",): [0.67, 0.33], ("F",): [0.28, 0.72]},
    "Coughing": {
        ("T", "T"): [0.96, 0.04],
        ("T", "F"): [0.88, 0.12],
        ("F", "T"): [0.79, 0.21],
        ("F", "F"): [0.13, 0.87],
    },
    "Fatigue": {
        ("T", "T"): [0.95, 0.05],
        ("T", "F"): [0.82, 0.18],
        ("F", "T"): [0.76, 0.24],
        ("F", "F"): [0.31, 0.69],
    },
    "Car_Accident": {
        ("T", "T"): [0.97, 0.03],
        ("T", "F"): [0.78, 0.22],
        ("F", "T"): [0.73, 0.27],
        ("F", "F"): [0.25, 0.75],
    },
}

CHILD_STATES = {
    "BirthAsphyxia": ["yes", "no"],
    "Disease": ["PFC", "TGA", "Fallot", "PAIVS", "TAPVD", "Lung"],
    "Age": ["d0_3", "d4_10", "d11_30"],
    "LVH": ["yes", "no"],
    "DuctFlow": ["Lt_to_Rt", "None", "Rt_to_Lt"],
    "CardiacMixing": ["None", "Mild", "Complete", "Transp"],
    "LungParench": ["Normal", "Congested", "Abnormal"],
    "LungFlow": ["Normal", "Low", "High"],
    "Sick": ["yes", "no"],
    "HypDistrib": ["Equal", "Unequal"],
    "HypoxiaInO2": ["Mild", "Moderate", "Severe"],
    "CO2": ["Normal", "Low", "High"],
    "ChestXray": ["Normal", "Oligaemic", "Plethoric", "Grd_Glass", "Asy_Patchy"],
    "Grunting": ["yes", "no"],
    "LVHreport": ["yes", "no"],
    "LowerBodyO2": ["lt_5", "r5_12", "gt_12"],
    "RUQO2": ["lt_5", "r5_12", "gt_12"],
    "CO2Report": ["lt_7_5", "ge_7_5"],
    "XrayReport": ["Normal", "Oligaemic", "Plethoric", "Grd_Glass", "Asy_Patchy"],
    "GruntingReport": ["yes", "no"],
}
CHILD_PARENTS = {
    "BirthAsphyxia": [],
    "Disease": ["BirthAsphyxia"],
    "Age": ["Disease", "Sick"],
    "LVH": ["Disease"],
    "DuctFlow": ["Disease"],
    "CardiacMixing": ["Disease"],
    "LungParench": ["Disease"],
    "LungFlow": ["Disease"],
    "Sick": ["Disease"],
    "HypDistrib": ["DuctFlow", "CardiacMixing"],
    "HypoxiaInO2": ["CardiacMixing", "LungParench"],
    "CO2": ["LungParench"],
    "ChestXray": ["LungParench", "LungFlow"],
    "Grunting": ["LungParench", "Sick"],
    "LVHreport": ["LVH"],
    "LowerBodyO2": ["HypDistrib", "HypoxiaInO2"],
    "RUQO2": ["HypoxiaInO2"],
    "CO2Report": ["CO2"],
    "XrayReport": ["ChestXray"],
    "GruntingReport": ["Grunting"],
}

ALARM_STATES = {
    "HYPOVOLEMIA": ["TRUE", "FALSE"],
    "LVFAILURE": ["TRUE", "FALSE"],
    "HISTORY": ["TRUE", "FALSE"],
    "LVEDVOLUME": ["LOW", "NORMAL", "HIGH"],
    "CVP": ["LOW", "NORMAL", "HIGH"],
    "PCWP": ["LOW", "NORMAL", "HIGH"],
    "STROKEVOLUME": ["LOW", "NORMAL", "HIGH"],
    "ERRLOWOUTPUT": ["TRUE", "FALSE"],
    "HRBP": ["LOW", "NORMAL", "HIGH"],
    "HR": ["LOW", "NORMAL", "HIGH"],
    "ERRCAUTER": ["TRUE", "FALSE"],
    "HREKG": ["LOW", "NORMAL", "HIGH"],
    "HRSAT": ["LOW", "NORMAL", "HIGH"],
    "INSUFFANESTH": ["TRUE", "FALSE"],
    "ANAPHYLAXIS": ["TRUE", "FALSE"],
    "TPR": ["LOW", "NORMAL", "HIGH"],
    "EXPCO2": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "KINKEDTUBE": ["TRUE", "FALSE"],
    "MINVOL": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "FIO2": ["LOW", "NORMAL"],
    "PVSAT": ["LOW", "NORMAL", "HIGH"],
    "SAO2": ["LOW", "NORMAL", "HIGH"],
    "PAP": ["LOW", "NORMAL", "HIGH"],
    "PULMEMBOLUS": ["TRUE", "FALSE"],
    "SHUNT": ["NORMAL", "HIGH"],
    "INTUBATION": ["NORMAL", "ESOPHAGEAL", "ONESIDED"],
    "PRESS": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "DISCONNECT": ["TRUE", "FALSE"],
    "MINVOLSET": ["LOW", "NORMAL", "HIGH"],
    "VENTMACH": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "VENTTUBE": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "VENTLUNG": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "VENTALV": ["ZERO", "LOW", "NORMAL", "HIGH"],
    "ARTCO2": ["LOW", "NORMAL", "HIGH"],
    "CATECHOL": ["NORMAL", "HIGH"],
    "CO": ["LOW", "NORMAL", "HIGH"],
    "BP": ["LOW", "NORMAL", "HIGH"],
}
ALARM_PARENTS = {
    "HISTORY": ["LVFAILURE"],
    "CVP": ["LVEDVOLUME"],
    "PCWP": ["LVEDVOLUME"],
    "HYPOVOLEMIA": [],
    "LVEDVOLUME": ["HYPOVOLEMIA", "LVFAILURE"],
    "LVFAILURE": [],
    "STROKEVOLUME": ["HYPOVOLEMIA", "LVFAILURE"],
    "ERRLOWOUTPUT": [],
    "HRBP": ["ERRLOWOUTPUT", "HR"],
    "HREKG": ["ERRCAUTER", "HR"],
    "ERRCAUTER": [],
    "HRSAT": ["ERRCAUTER", "HR"],
    "INSUFFANESTH": [],
    "ANAPHYLAXIS": [],
    "TPR": ["ANAPHYLAXIS"],
    "EXPCO2": ["ARTCO2", "VENTLUNG"],
    "KINKEDTUBE": [],
    "MINVOL": ["INTUBATION", "VENTLUNG"],
    "FIO2": [],
    "PVSAT": ["FIO2", "VENTALV"],
    "SAO2": ["PVSAT", "SHUNT"],
    "PAP": ["PULMEMBOLUS"],
    "PULMEMBOLUS": [],
    "SHUNT": ["INTUBATION", "PULMEMBOLUS"],
    "INTUBATION": [],
    "PRESS": ["INTUBATION", "KINKEDTUBE", "VENTTUBE"],
    "DISCONNECT": [],
    "MINVOLSET": [],
    "VENTMACH": ["MINVOLSET"],
    "VENTTUBE": ["DISCONNECT", "VENTMACH"],
    "VENTLUNG": ["INTUBATION", "KINKEDTUBE", "VENTTUBE"],
    "VENTALV": ["INTUBATION", "VENTLUNG"],
    "ARTCO2": ["VENTALV"],
    "CATECHOL": ["ARTCO2", "INSUFFANESTH", "SAO2", "TPR"],
    "HR": ["CATECHOL"],
    "CO": ["HR", "STROKEVOLUME"],
    "BP": ["CO", "TPR"],
}

INSURANCE_STATES = {
    "Age": ["Adolescent", "Adult", "Senior"],
    "SocioEcon": ["Prole", "Middle", "UpperMiddle", "Wealthy"],
    "GoodStudent": ["True", "False"],
    "RiskAversion": ["Psychopath", "Adventurous", "Normal", "Cautious"],
    "VehicleYear": ["Current", "Older"],
    "MakeModel": ["SportsCar", "Economy", "FamilySedan", "Luxury", "SuperLuxury"],
    "Mileage": ["FiveThou", "TwentyThou", "FiftyThou", "Domino"],
    "Antilock": ["True", "False"],
    "DrivingSkill": ["SubStandard", "Normal", "Expert"],
    "SeniorTrain": ["True", "False"],
    "DrivQuality": ["Poor", "Normal", "Excellent"],
    "ThisCarDam": ["None", "Mild", "Moderate", "Severe"],
    "RuggedAuto": ["EggShell", "Football", "Tank"],
    "Accident": ["None", "Mild", "Moderate", "Severe"],
    "ThisCarCost": ["Thousand", "TenThou", "HundredThou", "Million"],
    "Theft": ["True", "False"],
    "CarValue": ["FiveThou", "TenThou", "TwentyThou", "FiftyThou", "Million"],
    "HomeBase": ["Secure", "City", "Suburb", "Rural"],
    "AntiTheft": ["True", "False"],
    "PropCost": ["Thousand", "TenThou", "HundredThou", "Million"],
    "OtherCarCost": ["Thousand", "TenThou", "HundredThou", "Million"],
    "OtherCar": ["True", "False"],
    "MedCost": ["Thousand", "TenThou", "HundredThou", "Million"],
    "Cushioning": ["Poor", "Fair", "Good", "Excellent"],
    "Airbag": ["True", "False"],
    "ILiCost": ["Thousand", "TenThou", "HundredThou", "Million"],
    "DrivHist": ["Zero", "One", "Many"],
}
INSURANCE_PARENTS = {
    "Age": [],
    "SocioEcon": ["Age"],
    "GoodStudent": ["Age", "SocioEcon"],
    "RiskAversion": ["Age", "SocioEcon"],
    "VehicleYear": ["SocioEcon", "RiskAversion"],
    "MakeModel": ["SocioEcon", "RiskAversion"],
    "Mileage": [],
    "Antilock": ["VehicleYear", "MakeModel"],
    "DrivingSkill": ["Age", "SeniorTrain"],
    "SeniorTrain": ["Age", "RiskAversion"],
    "DrivQuality": ["DrivingSkill", "RiskAversion"],
    "ThisCarDam": ["RuggedAuto", "Accident"],
    "RuggedAuto": ["VehicleYear", "MakeModel"],
    "Accident": ["DrivQuality", "Mileage", "Antilock"],
    "ThisCarCost": ["ThisCarDam", "Theft", "CarValue"],
    "Theft": ["AntiTheft", "HomeBase", "CarValue"],
    "CarValue": ["VehicleYear", "MakeModel", "Mileage"],
    "HomeBase": ["SocioEcon", "RiskAversion"],
    "AntiTheft": ["SocioEcon", "RiskAversion"],
    "PropCost": ["ThisCarCost", "OtherCarCost"],
    "OtherCarCost": ["RuggedAuto", "Accident"],
    "OtherCar": ["SocioEcon"],
    "MedCost": ["Age", "Accident", "Cushioning"],
    "Cushioning": ["RuggedAuto", "Airbag"],
    "Airbag": ["VehicleYear", "MakeModel"],
    "ILiCost": ["Accident"],
    "DrivHist": ["DrivingSkill", "RiskAversion"],
}

HAILFINDER_STATES = {
    "N07muVerMo": ["StrongUp", "WeakUp", "Neutral", "Down"],
    "SubjVertMo": ["StrongUp", "WeakUp", "Neutral", "Down"],
    "QGVertMotion": ["StrongUp", "WeakUp", "Neutral", "Down"],
    "CombVerMo": ["StrongUp", "WeakUp", "Neutral", "Down"],
    "AreaMeso_ALS": ["StrongUp", "WeakUp", "Neutral", "Down"],
    "SatContMoist": ["VeryWet", "Wet", "Neutral", "Dry"],
    "RaoContMoist": ["VeryWet", "Wet", "Neutral", "Dry"],
    "CombMoisture": ["VeryWet", "Wet", "Neutral", "Dry"],
    "AreaMoDryAir": ["VeryWet", "Wet", "Neutral", "Dry"],
    "VISCloudCov": ["Cloudy", "PC", "Clear"],
    "IRCloudCover": ["Cloudy", "PC", "Clear"],
    "CombClouds": ["Cloudy", "PC", "Clear"],
    "CldShadeOth": ["Cloudy", "PC", "Clear"],
    "AMInstabMt": ["None", "Weak", "Strong"],
    "InsInMt": ["None", "Weak", "Strong"],
    "WndHodograph": ["DCVZFavor", "StrongWest", "Westerly", "Other"],
    "OutflowFrMt": ["None", "Weak", "Strong"],
    "MorningBound": ["None", "Weak", "Strong"],
    "Boundaries": ["None", "Weak", "Strong"],
    "CldShadeConv": ["None", "Some", "Marked"],
    "CompPlFcst": ["IncCapDecIns", "LittleChange", "DecCapIncIns"],
    "CapChange": ["Decreasing", "LittleChange", "Increasing"],
    "LoLevMoistAd": ["StrongPos", "WeakPos", "Neutral", "Negative"],
    "InsChange": ["Decreasing", "LittleChange", "Increasing"],
    "MountainFcst": ["XNIL", "SIG", "SVR"],
    "Date": ["May15_Jun14", "Jun15_Jul1", "Jul2_Jul15", "Jul16_Aug10", "Aug11_Aug20", "Aug20_Sep15"],
    "Scenario": ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"],
    "ScenRelAMCIN": ["AB", "CThruK"],
    "MorningCIN": ["None", "PartInhibit", "Stifling", "TotalInhibit"],
    "AMCINInScen": ["LessThanAve", "Average", "MoreThanAve"],
    "CapInScen": ["LessThanAve", "Average", "MoreThanAve"],
    "ScenRelAMIns": ["ABI", "CDEJ", "FG", "H", "K"],
    "LIfr12ZDENSd": ["LIGt0", "N1GtLIGt_4", "N5GtLIGt_8", "LILt_8"],
    "AMDewptCalPl": ["Instability", "Neutral", "Stability"],
    "AMInsWliScen": ["LessUnstable", "Average", "MoreUnstable"],
    "InsSclInScen": ["LessUnstable", "Average", "MoreUnstable"],
    "ScenRel3_4": ["ACEFK", "B", "D", "GJ", "HI"],
    "LatestCIN": ["None", "PartInhibit", "Stifling", "TotalInhibit"],
    "LLIW": ["Unfavorable", "Weak", "Moderate", "Strong"],
    "CurPropConv": ["None", "Slight", "Moderate", "Strong"],
    "ScnRelPlFcst": ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"],
    "PlainsFcst": ["XNIL", "SIG", "SVR"],
    "N34StarFcst": ["XNIL", "SIG", "SVR"],
    "R5Fcst": ["XNIL", "SIG", "SVR"],
    "Dewpoints": ["LowEvrywhere", "LowAtStation", "LowSHighN", "LowNHighS", "LowMtsHighPl", "HighEvrywhere", "Other"],
    "LowLLapse": ["CloseToDryAd", "Steep", "ModerateOrLe", "Stable"],
    "MeanRH": ["VeryMoist", "Average", "Dry"],
    "MidLLapse": ["CloseToDryAd", "Steep", "ModerateOrLe"],
    "MvmtFeatures": ["StrongFront", "MarkedUpper", "OtherRapid", "NoMajor"],
    "RHRatio": ["MoistMDryL", "DryMMoistL", "Other"],
    "SfcWndShfDis": ["DenvCyclone", "E_W_N", "E_W_S", "MovingFtorOt", "DryLine", "None", "Other"],
    "SynForcng": ["SigNegative", "NegToPos", "SigPositive", "PosToNeg", "LittleChange"],
    "TempDis": ["QStationary", "Moving", "None", "Other"],
    "WindAloft": ["LV", "SWQuad", "NWQuad", "AllElse"],
    "WindFieldMt": ["Westerly", "LVorOther"],
    "WindFieldPln": ["LV", "DenvCyclone", "LongAnticyc", "E_NE", "SEquad", "WidespdDnsl"],
}
HAILFINDER_PARENTS = {
    "N07muVerMo": [],
    "SubjVertMo": [],
    "QGVertMotion": [],
    "CombVerMo": ["N07muVerMo", "SubjVertMo", "QGVertMotion"],
    "AreaMeso_ALS": ["CombVerMo"],
    "SatContMoist": [],
    "RaoContMoist": [],
    "CombMoisture": ["SatContMoist", "RaoContMoist"],
    "AreaMoDryAir": ["AreaMeso_ALS", "CombMoisture"],
    "VISCloudCov": [],
    "IRCloudCover": [],
    "CombClouds": ["VISCloudCov", "IRCloudCover"],
    "CldShadeOth": ["AreaMeso_ALS", "AreaMoDryAir", "CombClouds"],
    "AMInstabMt": [],
    "InsInMt": ["CldShadeOth", "AMInstabMt"],
    "WndHodograph": [],
    "OutflowFrMt": ["InsInMt", "WndHodograph"],
    "MorningBound": [],
    "Boundaries": ["WndHodograph", "OutflowFrMt", "MorningBound"],
    "CldShadeConv": ["InsInMt", "WndHodograph"],
    "CompPlFcst": ["AreaMeso_ALS", "CldShadeOth", "Boundaries", "CldShadeConv"],
    "CapChange": ["CompPlFcst"],
    "LoLevMoistAd": [],
    "InsChange": ["CompPlFcst", "LoLevMoistAd"],
    "MountainFcst": ["InsInMt"],
    "Date": [],
    "Scenario": ["Date"],
    "ScenRelAMCIN": ["Scenario"],
    "MorningCIN": [],
    "AMCINInScen": ["ScenRelAMCIN", "MorningCIN"],
    "CapInScen": ["AMCINInScen", "CapChange"],
    "ScenRelAMIns": ["Scenario"],
    "LIfr12ZDENSd": [],
    "AMDewptCalPl": [],
    "AMInsWliScen": ["ScenRelAMIns", "LIfr12ZDENSd", "AMDewptCalPl"],
    "InsSclInScen": ["AMInsWliScen", "InsChange"],
    "ScenRel3_4": ["Scenario"],
    "LatestCIN": [],
    "LLIW": [],
    "CurPropConv": ["LatestCIN", "LLIW"],
    "ScnRelPlFcst": ["Scenario"],
    "PlainsFcst": ["CapInScen", "InsSclInScen", "CurPropConv", "ScnRelPlFcst"],
    "N34StarFcst": ["ScenRel3_4", "PlainsFcst"],
    "R5Fcst": ["MountainFcst", "N34StarFcst"],
    "Dewpoints": ["Scenario"],
    "LowLLapse": ["Scenario"],
    "MeanRH": ["Scenario"],
    "MidLLapse": ["Scenario"],
    "MvmtFeatures": ["Scenario"],
    "RHRatio": ["Scenario"],
    "SfcWndShfDis": ["Scenario"],
    "SynForcng": ["Scenario"],
    "TempDis": ["Scenario"],
    "WindAloft": ["Scenario"],
    "WindFieldMt": ["Scenario"],
    "WindFieldPln": ["Scenario"],
}

NETWORKS = {
    "asia": (ASIA_STATES, ASIA_PARENTS, ASIA_CPTS),
    "cancer": (CANCER_STATES, CANCER_PARENTS, CANCER_CPTS),
    "earthquake": (EARTHQUAKE_STATES, EARTHQUAKE_PARENTS, EARTHQUAKE_CPTS),
    "survey": (SURVEY_STATES, SURVEY_PARENTS, SURVEY_CPTS),
    "lucas": (LUCAS_STATES, LUCAS_PARENTS, LUCAS_CPTS),
    "child": (CHILD_STATES, CHILD_PARENTS, None),
    "alarm": (ALARM_STATES, ALARM_PARENTS, None),
    "insurance": (INSURANCE_STATES, INSURANCE_PARENTS, None),
    "hailfinder": (HAILFINDER_STATES, HAILFINDER_PARENTS, None),
}

# lucas parameters are approximations of the published generator.
APPROX_PARAMS = {"lucas"}
