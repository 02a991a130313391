// Frozen high-precision references for D_nu(z), generated offline
// with 50-digit arithmetic. (order, argument, value)
pub(crate) const PCF_REFERENCE: [(f64, f64, f64); 140] = [
    (-0.02, -14.0, 7318024530070617697.501),
    (-0.02, -12.0, 19274097130171.68789113),
    (-0.02, -9.0, 3712525.134176111916753),
    (-0.02, -7.6, 13202.18032978527597971),
    (-0.02, -6.0, 73.0643235371106987201),
    (-0.02, -4.5, 1.946531128213128760495),
    (-0.02, -3.0, 0.2951212784242669743249),
    (-0.02, -1.3, 0.7083046727202528947775),
    (-0.02, -0.4, 0.984324371747155177959),
    (-0.02, 0.0, 1.012537598053690554408),
    (-0.02, 0.7, 0.8836774618350042642151),
    (-0.02, 1.5, 0.5634414344579888915264),
    (-0.02, 2.8, 0.1378334414935846993203),
    (-0.02, 4.2, 0.01180493590285171917249),
    (-0.02, 5.5, 0.0005019967938501473075457),
    (-0.02, 6.6, 0.0000179491473243481091068),
    (-0.02, 7.4, 0.000001089043263005455080451),
    (-0.02, 8.5, 1.370589700022453546874e-8),
    (-0.02, 10.0, 1.326155058407736645203e-11),
    (-0.02, 14.0, 4.973079447104936545761e-22),
    (-0.032, -14.0, 12162337248979027488.37),
    (-0.032, -12.0, 31972687792493.89023567),
    (-0.032, -9.0, 6136645.116972614963499),
    (-0.032, -7.6, 21776.28927783683100328),
    (-0.032, -6.0, 120.1480067938086528313),
    (-0.032, -4.5, 3.184121071227729180445),
    (-0.032, -3.0, 0.4139186527644974502064),
    (-0.032, -1.3, 0.7402880236819738902201),
    (-0.032, -0.4, 0.998303331875965704954),
    (-0.032, 0.0, 1.019900812457697682801),
    (-0.032, 0.7, 0.8829741897594491435921),
    (-0.032, 1.5, 0.5596444896418850313127),
    (-0.032, 2.8, 0.1360471251455068779943),
    (-0.032, 4.2, 0.01159954202211014197426),
    (-0.032, 5.5, 0.0004917339223889573385085),
    (-0.032, 6.6, 0.00001754480107043715792042),
    (-0.032, 7.4, 0.000001063079222078239996646),
    (-0.032, 8.5, 1.335725675314808985972e-8),
    (-0.032, 10.0, 1.28993345046348244547e-11),
    (-0.032, 14.0, 4.817902242071007034392e-22),
    (-0.45, -14.0, 570227964080755986679.2),
    (-0.45, -12.0, 1404076613820850.968237),
    (-0.45, -9.0, 238238052.466217954126),
    (-0.45, -7.6, 785466.4239866526540682),
    (-0.45, -6.0, 3901.027901286409198714),
    (-0.45, -4.5, 90.10759947710611381693),
    (-0.45, -3.0, 7.068739149568711868447),
    (-0.45, -1.3, 1.926891483205794639338),
    (-0.45, -0.4, 1.410703387038736993529),
    (-0.45, 0.0, 1.203424060378401194201),
    (-0.45, 0.7, 0.8246935414366852487808),
    (-0.45, 1.5, 0.4333524216268649153777),
    (-0.45, 2.8, 0.08562566411871434378159),
    (-0.45, 4.2, 0.006266145598661398483827),
    (-0.45, 5.5, 0.0002388190080796124562498),
    (-0.45, 6.6, 0.000007918069166771447602093),
    (-0.45, 7.4, 4.579866479350876063103e-7),
    (-0.45, 8.5, 5.437590614934645493833e-9),
    (-0.45, 10.0, 4.911878791899992027181e-12),
    (-0.45, 14.0, 1.596235326186874989192e-22),
    (-1.0, -14.0, 4781008848136744256244.0),
    (-1.0, -12.0, 10806654894480100.76357),
    (-1.0, -9.0, 1561540284.904353044013),
    (-1.0, -7.6, 4680607.809120483152729),
    (-1.0, -6.0, 20311.41926452948053021),
    (-1.0, -4.5, 396.0082860981229434348),
    (-1.0, -3.0, 23.75012332835297233711),
    (-1.0, -1.3, 3.454323830485929939563),
    (-1.0, -0.4, 1.709946635943265957716),
    (-1.0, 0.0, 1.253314137315500251208),
    (-1.0, 0.7, 0.6855531637195096879658),
    (-1.0, 1.5, 0.2939028913842150067265),
    (-1.0, 2.8, 0.04546949972701988422847),
    (-1.0, 4.2, 0.002752146527300992961581),
    (-1.0, 5.5, 0.00009161295928133875054456),
    (-1.0, 6.6, 0.000002763982957575240524443),
    (-1.0, 7.4, 1.505494140150747440069e-7),
    (-1.0, 8.5, 1.660814163269757271191e-9),
    (-1.0, 10.0, 1.375303588825586993655e-12),
    (-1.0, 14.0, 3.726096849084027562984e-23),
    (-1.02, -14.0, 5096738534715178835193.0),
    (-1.02, -12.0, 11484634240859990.64362),
    (-1.02, -9.0, 1649896209.062649678199),
    (-1.02, -7.6, 4928502.257465359635999),
    (-1.02, -6.0, 21283.92945327463388518),
    (-1.02, -4.5, 412.4882569499941811116),
    (-1.02, -3.0, 24.51940248792494771363),
    (-1.02, -1.3, 3.504514293601631301356),
    (-1.02, -0.4, 1.715660867598085021128),
    (-1.02, 0.0, 1.251759534061884219016),
    (-1.02, 0.7, 0.6798478143897521163218),
    (-1.02, 1.5, 0.2895021097590646793585),
    (-1.02, 2.8, 0.04441394140070951034895),
    (-1.02, 4.2, 0.002670337370660681200335),
    (-1.02, 5.5, 0.00008846158166034613388003),
    (-1.02, 6.6, 0.000002659885196732046811279),
    (-1.02, 7.4, 1.445664606677592665194e-7),
    (-1.02, 8.5, 1.590591087745250563594e-9),
    (-1.02, 10.0, 1.313020081479423859567e-12),
    (-1.02, 14.0, 3.533993260242487810885e-23),
    (-2.0, -14.0, 6.693412387391441958742e+22),
    (-2.0, -12.0, 129679858733761209.1629),
    (-2.0, -9.0, 14053862564.13917739772),
    (-2.0, -7.6, 35572619.34931620749552),
    (-2.0, -6.0, 121868.515710586687268),
    (-2.0, -4.5, 1782.043617156980731203),
    (-2.0, -3.0, 71.35576920962078134812),
    (-2.0, -1.3, 5.14602723395854943419),
    (-2.0, -0.4, 1.644768093529629592526),
    (-2.0, 0.0, 1.0),
    (-2.0, 0.7, 0.4048186903398267779169),
    (-2.0, 1.5, 0.1289284876546004996769),
    (-2.0, 2.8, 0.01354382168538932030826),
    (-2.0, 4.2, 0.0005961629152507667763865),
    (-2.0, 5.5, 0.00001570340610747535376975),
    (-2.0, 6.6, 4.014548115202429539391e-7),
    (-2.0, 7.4, 1.966147503641254635814e-8),
    (-2.0, 8.5, 1.903215307747515295575e-10),
    (-2.0, 10.0, 1.349079767081506581167e-13),
    (-2.0, 14.0, 2.635007464582534899378e-24),
    (-2.5, -14.0, 1.887584173246881267404e+23),
    (-2.5, -12.0, 338811342694473474.6346),
    (-2.5, -9.0, 31863351858.77868759017),
    (-2.5, -7.6, 74251677.66925601457043),
    (-2.5, -6.0, 226911.1340706117380782),
    (-2.5, -4.5, 2896.921642074463463894),
    (-2.5, -3.0, 96.93610381354520044429),
    (-2.5, -1.3, 5.303600741254278647375),
    (-2.5, -0.4, 1.435005605021628461037),
    (-2.5, 0.0, 0.8108534761716801887368),
    (-2.5, 0.7, 0.290514572096641047013),
    (-2.5, 1.5, 0.08154097949424595500273),
    (-2.5, 2.8, 0.007204028121558674630792),
    (-2.5, 4.2, 0.0002733128591253449438038),
    (-2.5, 5.5, 0.000006437164487675976154298),
    (-2.5, 6.6, 1.51881218769934457124e-7),
    (-2.5, 7.4, 7.062784334164139653969e-9),
    (-2.5, 8.5, 6.412617905822075317416e-11),
    (-2.5, 10.0, 4.210624070228818118388e-14),
    (-2.5, 14.0, 6.994343577083758704242e-25),
];

// (order, argument, dD/dz) frozen spot derivatives
pub(crate) const PCF_DERIV_REFERENCE: [(f64, f64, f64); 5] = [
    (-0.02, 0.7, -0.3228840679300465348017),
    (-0.45, -3.0, -8.88744347984435826834),
    (-1.0, 1.5, -0.3493556561927617547218),
    (-2.0, 5.5, -0.00004842859248578152767775),
    (-0.02, -9.0, -16291561.07746048993859),
];
